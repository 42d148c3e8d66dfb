#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weave/diagram.hpp"
#include "weave/laurent.hpp"

namespace weave {

/// Sorted multiset of sign-normalized winding vectors.
using WindingKey = std::vector<HomologyVector>;
/// Winding-multiset key -> coefficient polynomial in A.
using BracketValue = std::map<WindingKey, LaurentPoly>;

enum class Split : std::uint8_t { A, B };

inline constexpr int kDefaultCrossingBudget = 24;

struct State {
  std::vector<Split> splits;
  int a_count = 0;
  int b_count = 0;
  int trivial_loops = 0;
  WindingKey windings;
};

/// Smooths crossing c; the remaining crossings are renumbered in order.
SurfaceDiagram split(const SurfaceDiagram& d, int c, Split kind);

State resolve_state(const SurfaceDiagram& d, const std::vector<Split>& splits);

struct BracketOptions {
  int budget = kDefaultCrossingBudget;
  int workers = 1;
};

/// State sum over all 2^C states. A state with no winding loop contributes
/// A^(i-j) d^(c-1); a state with windings contributes A^(i-j) d^c under its
/// winding key (the formal multiplier absorbs the d^-1 so every coefficient
/// stays in Z[A, 1/A]).
BracketValue bracket(const SurfaceDiagram& d, const BracketOptions& opts = {});
/// Same value by recursive skein expansion on crossing 0; independent code path.
BracketValue bracket_skein(const SurfaceDiagram& d, int budget = kDefaultCrossingBudget);

BracketValue operator*(const BracketValue& v, const LaurentPoly& p);
BracketValue operator+(const BracketValue& a, const BracketValue& b);
BracketValue operator-(const BracketValue& a, const BracketValue& b);
/// Removes zero entries.
BracketValue normalized(BracketValue v);

std::string format_key(const WindingKey& key);
/// One line per key, keys in order: "<key>: poly" ("<>" for the empty key).
std::string format_bracket(const BracketValue& v, const std::string& var = "A");

/// Per-dart orientation: out[dart.index()] is 1 when the strand leaves through that slot.
using Orientation = std::vector<std::uint8_t>;

/// Generic vector used to orient each thread so that homology . ref > 0.
HomologyVector default_reference(int genus);
/// Orients threads by the reference vector; null-homologous components keep their traced direction.
Orientation reference_orientation(const SurfaceDiagram& d, const HomologyVector& ref);
Orientation reference_orientation(const SurfaceDiagram& d);

/// +1 when the under-strand leaves one slot counterclockwise of the over-strand's exit.
std::vector<int> crossing_signs(const SurfaceDiagram& d, const Orientation& o);

int writhe(const SurfaceDiagram& d, const Orientation& o);
int writhe(const SurfaceDiagram& d);
/// Self-crossing sign sums, indexed by thread id.
std::vector<int> writhe_per_component(const SurfaceDiagram& d, const Orientation& o);
std::vector<int> writhe_per_component(const SurfaceDiagram& d);

/// (-A)^(-3w) <D>.
BracketValue kauffman_f(const SurfaceDiagram& d, const Orientation& o, const BracketOptions& opts = {});
BracketValue kauffman_f(const SurfaceDiagram& d, const BracketOptions& opts = {});
/// f with A = t^(-1/4); exponents are in the variable q = t^(1/4).
BracketValue jones(const SurfaceDiagram& d, const BracketOptions& opts = {});

struct Checkerboard {
  /// White faces are enclosed by the loops of the all-A state, black ones by the all-B loops.
  std::vector<int> white;
  std::vector<int> black;
};
/// Colours each face by the A/B label of its corners. Throws NotCheckerboardColorable
/// when some face mixes A and B corners.
Checkerboard checkerboard(const SurfaceDiagram& d);

struct DegreeStats {
  bool has_terms = false;
  int maxdeg = 0;
  int mindeg = 0;
  int span = 0;
  bool colorable = false;
  int white = 0;
  int black = 0;
};
DegreeStats degree_stats(const SurfaceDiagram& d, const BracketValue& b);
DegreeStats degree_stats(const SurfaceDiagram& d, const BracketOptions& opts = {});

/// Signed crossing count between threads i and j (ids from threads(d)).
int linking_number(const SurfaceDiagram& d, int i, int j, const Orientation& o, bool halved = false);
int linking_number(const SurfaceDiagram& d, int i, int j, bool halved = false);
/// Literal pairwise sums keyed by the thread tags (lower tag first).
std::map<std::pair<int, int>, int> linking_by_tag(const SurfaceDiagram& d, const Orientation& o);

struct Adequacy {
  bool plus = false;
  bool minus = false;
};
/// Self-touch test on the all-A and all-B states.
Adequacy adequacy(const SurfaceDiagram& d);
/// Literal definition: every single switch from the all-A (all-B) state lowers the loop count.
Adequacy adequacy_by_switching(const SurfaceDiagram& d);

/// Every thread replaced by r parallel copies; each crossing becomes an r x r grid.
SurfaceDiagram r_parallel(const SurfaceDiagram& d, int r);

struct DegreeBoundsReport {
  int loops_all_a = 0;  // all loops of the all-A state
  int loops_all_b = 0;
  int max_bound = 0;  // C + 2 c_A - 2
  int min_bound = 0;  // -C - 2 c_B + 2
  int maxdeg = 0;
  int mindeg = 0;
  bool max_ok = false;
  bool min_ok = false;
  bool max_tight = false;
  bool min_tight = false;
  Adequacy adequate;
};
DegreeBoundsReport degree_bounds_check(const SurfaceDiagram& d, const BracketOptions& opts = {});

/// Checks A^4 f(L+) - A^-4 f(L-) = (A^-2 - A^2) f(L0) at crossing c, orienting
/// L0 and L- by the orientation of d.
bool jones_skein_holds(const SurfaceDiagram& d, int c, const BracketOptions& opts = {});

}  // namespace weave
