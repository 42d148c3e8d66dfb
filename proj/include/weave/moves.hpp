#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weave/diagram.hpp"
#include "weave/invariants.hpp"

namespace weave {

enum class MoveKind { R1_add, R1_remove, R2_add, R2_remove, R3 };

/// One side of an edge: traversing from ends[dir] keeps the face on the right.
struct EdgeSide {
  int edge = -1;
  int dir = 0;
  bool operator==(const EdgeSide&) const = default;
};

/// A Reidemeister move with its site.
///  R1_add:    `edge`, `sign` (+1: the first pass of the curl is over).
///  R2_add:    `first` is pushed across the face onto `second`; `over_first`.
///  removes/R3: `darts` are the boundary darts of the monogon, bigon or triangle.
struct Move {
  MoveKind kind = MoveKind::R1_add;
  int edge = -1;
  int sign = 1;
  EdgeSide first;
  EdgeSide second;
  bool over_first = true;
  std::vector<Dart> darts;

  bool operator==(const Move&) const = default;
};

/// "R1_add e3 sign=+", "R1_remove c5.1", "R2_add e3:0 e7:1 over=first",
/// "R2_remove c4.1 c5.2", "R3 c1.0 c2.3 c3.1".
std::string format_move(const Move& m);
/// Throws ParseError.
Move parse_move(std::string_view line);

/// Removes and R3 are only listed at faces with trivial holonomy.
std::vector<Move> enumerate_moves(const SurfaceDiagram& d);
/// Throws IllegalMove when the site does not support the move.
SurfaceDiagram apply_move(const SurfaceDiagram& d, const Move& m);

/// Face holonomy is unchanged when every edge word at crossing c is rebased by h.
SurfaceDiagram gauge(const SurfaceDiagram& d, int c, const BoundaryWord& h);

struct MoveTrace {
  std::uint64_t seed = 0;
  std::vector<Move> moves;
};

std::string format_trace(const MoveTrace& t);
/// Lines starting with '#' and blank lines are skipped; "seed N" sets the seed.
MoveTrace parse_trace(std::string_view text);

/// Random walk; removes are preferred once C exceeds three quarters of the cap.
MoveTrace fuzz(const SurfaceDiagram& d, int steps, std::uint64_t seed, int max_crossings);
/// One walk per seed, spread over `workers` threads; results are in seed order.
std::vector<MoveTrace> fuzz_many(const SurfaceDiagram& d, int steps, const std::vector<std::uint64_t>& seeds,
                                 int max_crossings, int workers);
/// Applies the trace. `replay_all` also returns the start and every intermediate diagram.
SurfaceDiagram replay(const SurfaceDiagram& d, const MoveTrace& t);
std::vector<SurfaceDiagram> replay_all(const SurfaceDiagram& d, const MoveTrace& t);

/// Greedy removes, then R3 shuffles to expose more, repeated over `restarts` seeded walks.
SurfaceDiagram simplify(const SurfaceDiagram& d, int restarts, std::uint64_t seed);

struct CrossingNumberBounds {
  int lower = 0;
  bool lower_certified = false;  // false when the bracket has no winding-free term
  int upper = 0;
};

CrossingNumberBounds crossing_number_bounds(const SurfaceDiagram& d, int restarts = 8, std::uint64_t seed = 1,
                                            const BracketOptions& opts = {});

}  // namespace weave
