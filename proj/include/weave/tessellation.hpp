#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weave/diagram.hpp"

namespace weave {

struct VertexSymbol {
  std::vector<int> faces;  // least rotation or reflection
  bool euclidean = false;  // interior angles sum to a full turn

  std::string to_string() const;
  bool operator==(const VertexSymbol&) const = default;
};

/// Parses "(k1,k2,...)". Throws SyntaxError, and InfeasibleSymbol when
/// `require_euclidean` is set and the angles do not sum to a full turn.
VertexSymbol parse_vertex_symbol(std::string_view text, bool require_euclidean = false);

using Vec2 = std::array<double, 2>;

struct TilingEdge {
  int u = 0;
  int v = 0;
  std::array<int, 2> wrap{};  // cell translation picked up going from u to v
};

/// Tiling of the torus obtained from a k x k block of primitive cells.
struct PeriodicTiling {
  VertexSymbol symbol;
  int scale = 1;
  std::array<Vec2, 2> basis{};    // primitive lattice vectors
  std::vector<Vec2> vertices;     // lattice coordinates inside the k x k block
  std::vector<TilingEdge> edges;  // wraps are in units of the whole block
  int face_count = 0;
};

/// Builds one of (4,4,4,4), (3,3,3,3,3,3), (6,6,6), (3,6,3,6). Throws UnsupportedTiling.
PeriodicTiling build_tiling(const VertexSymbol& sym, int scale);

enum class Method { Cr, nCr, nBr };

struct TransformSpec {
  Method method = Method::Cr;
  int m = 1;
  int valency = 0;  // optional n from "4Cr"; 0 when absent
};

/// Accepts "Cr", "nCr", "nBr", "4Cr", "3Br", ...
TransformSpec parse_method(std::string_view text, int m);

/// Projection of the polygonal link; every crossing gets over=13 until a weaving map is assigned.
SurfaceDiagram transform(const PeriodicTiling& t, const TransformSpec& spec);

enum class Classification { Weave, Polycatenane, Mixed };
Classification classify(const SurfaceDiagram& d);
std::string to_string(Classification c);

struct CrossingSequenceSpec {
  /// (i, j) with i < j, 1-based thread-set numbers -> (p, q): along a thread of set i,
  /// cyclically p crossings over set j, then q under it.
  std::map<std::pair<int, int>, std::pair<int, int>> pairs;
  /// Ignore pairs and make every thread alternate over all its crossings.
  bool alternate_all = false;

  std::pair<int, int> get(int i, int j) const;
};

/// Parses "i,j:p,q[;...]" or "alt".
CrossingSequenceSpec parse_sequence(std::string_view text);

/// Sets over/under at every crossing. Throws MixedSetCrossing or InconsistentSequence.
SurfaceDiagram assign_weaving_map(const SurfaceDiagram& d, const CrossingSequenceSpec& seq);

}  // namespace weave
