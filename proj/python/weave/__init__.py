"""Periodic weave diagrams on surfaces: invariants, moves and canonical forms."""

from ._weave import *  # noqa: F401,F403
from ._weave import Diagram, WeaveError, run_cli

__all__ = ["Diagram", "WeaveError", "run_cli"]
