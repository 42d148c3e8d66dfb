#pragma once

#include <cstdint>
#include <vector>

#include "weave/diagram.hpp"
#include "weave/invariants.hpp"

namespace weave {

using WindingSet = std::vector<HomologyVector>;
using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix identity_matrix(int n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
/// U^T J U == J for J = [[0, I], [-I, 0]] in the (a_1..a_g, b_1..b_g) basis.
bool is_symplectic(const IntMatrix& u);

/// Sum of squared Euclidean norms.
std::int64_t q_functional(const WindingSet& v);
/// Row vectors times U. Throws NonSymplectic.
WindingSet apply_twist(const WindingSet& v, const IntMatrix& u);

/// Every winding vector of every key, with the multiplicity it has inside its key.
WindingSet winding_set(const BracketValue& b);

struct CanonicalForm {
  WindingSet set;  // sign-normalized, sorted
  IntMatrix u;
  std::int64_t q_before = 0;
  std::int64_t q_after = 0;
  bool certified = false;  // exact minimum (g = 1)
};

/// Minimizes Q(VU). g = 1: exact, over all minimizers the chosen one yields the
/// lexicographically greatest sorted set, then the smallest Frobenius norm, then
/// the lexicographically least U. g >= 2: greedy descent over symplectic
/// transvections, not certified.
CanonicalForm canonical_form(const WindingSet& v, int genus);

enum class TwistCurve { Alpha, Beta };

/// Homology action of the twist: h -> h M (row vectors).
IntMatrix twist_matrix(TwistCurve curve, int direction);
/// Re-cuts the torus cell: alpha twist b -> b a^dir, beta twist a -> a b^dir.
/// Throws UnsupportedGenus for g >= 2.
SurfaceDiagram dehn_twist_diagram(const SurfaceDiagram& d, TwistCurve curve, int direction);

/// Number of faces incident to at least one crossing.
int size(const SurfaceDiagram& d);

/// True when some fixed-point-free automorphism preserves the rotation system,
/// acts trivially on homology (a translation of the cell) and, unless
/// `projection_only`, preserves over/under.
bool has_translation_symmetry(const SurfaceDiagram& d, bool projection_only = false);
bool is_minimal_size(const SurfaceDiagram& d);

}  // namespace weave
