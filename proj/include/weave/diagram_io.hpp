#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "weave/diagram.hpp"

namespace weave {

/// Reads the line-oriented interchange format:
///   genus N
///   crossing cK over=13|02
///   edge cX.s cY.t word=<letters> [tag=N]
///   loop word=<letters> [tag=N]
/// Blank lines and '#' comments are ignored. Crossings must be declared
/// densely as c0, c1, ... Throws ParseError.
SurfaceDiagram parse_diagram(std::string_view text);
SurfaceDiagram read_diagram_file(const std::string& path);

/// Writes the interchange format; parse_diagram(format_diagram(d)) == d up to tags
/// unless `with_tags` is set.
std::string format_diagram(const SurfaceDiagram& d, bool with_tags = false);

}  // namespace weave
