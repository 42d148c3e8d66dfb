#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "weave/diagram.hpp"

namespace weave {

/// A diagram produced from a tessellation recipe.
struct BuildSpec {
  std::string name;
  std::string tiling;
  std::string method;
  int m = 1;
  int scale = 1;
  std::string seq;
};

/// Tessellation builds that give connected, reduced, alternating weaves.
std::vector<BuildSpec> standard_builds();
/// Tiling, transform and, for weaves, the weaving map. Threads are labelled.
SurfaceDiagram build_diagram(const BuildSpec& spec);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int violation = 1;
inline constexpr int input_error = 2;
inline constexpr int budget_exceeded = 3;
}  // namespace exit_code

/// Runs the command line `args` (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weave
