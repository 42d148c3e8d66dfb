#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "weave/word.hpp"

namespace weave {

/// Which pair of opposite slots carries the over-strand.
enum class OverAxis : std::uint8_t { Axis02 = 0, Axis13 = 1 };

/// Attachment point (crossing, slot); slots 0..3 run counterclockwise.
struct Dart {
  int crossing = -1;
  int slot = 0;

  Dart turned(int k) const { return {crossing, (slot + k) & 3}; }
  Dart opposite() const { return turned(2); }
  int index() const { return crossing * 4 + slot; }
  static Dart from_index(int i) { return {i / 4, i % 4}; }

  auto operator<=>(const Dart&) const = default;
};

struct Crossing {
  OverAxis over = OverAxis::Axis13;
};

/// Strand segment between two slots. `word` is read from ends[0] to ends[1].
/// `tag` labels the thread the segment belongs to; moves propagate it.
struct Edge {
  std::array<Dart, 2> ends;
  BoundaryWord word;
  int tag = -1;
};

/// Closed component without crossings.
struct FreeLoop {
  BoundaryWord word;
  int tag = -1;
};

inline bool strand_is_over(OverAxis axis, int slot) {
  return static_cast<int>(axis) == (slot & 1);
}

/// A 4-valent diagram drawn on a marked genus-g unit cell.
///
/// The diagram is a value: every operation that changes it returns a new one.
/// Slot lookups are precomputed on construction; a malformed input (a slot
/// used twice or left empty) is representable so that `validate` can report it.
class SurfaceDiagram {
 public:
  explicit SurfaceDiagram(int genus = 1);
  SurfaceDiagram(int genus, std::vector<Crossing> crossings, std::vector<Edge> edges,
                 std::vector<FreeLoop> loops = {});

  int genus() const { return genus_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<FreeLoop>& loops() const { return loops_; }

  /// Edge attached at the dart, or -1.
  int edge_at(Dart d) const { return slot_edge_[static_cast<std::size_t>(d.index())]; }
  /// Which end (0/1) of edge_at(d) sits at d.
  int end_at(Dart d) const { return slot_end_[static_cast<std::size_t>(d.index())]; }
  /// The dart at the far end of the edge leaving d.
  Dart partner(Dart d) const;
  /// Word read along the edge leaving d.
  BoundaryWord word_from(Dart d) const;
  /// True when every slot carries exactly one edge-end.
  bool slots_well_formed() const { return slots_ok_; }

  bool over_at(Dart d) const { return strand_is_over(crossings_[static_cast<std::size_t>(d.crossing)].over, d.slot); }

  SurfaceDiagram with_crossings(std::vector<Crossing> crossings) const;
  SurfaceDiagram with_edges(std::vector<Edge> edges) const;
  SurfaceDiagram with_loops(std::vector<FreeLoop> loops) const;

  bool operator==(const SurfaceDiagram& other) const;

 private:
  void index_slots();

  int genus_ = 1;
  std::vector<Crossing> crossings_;
  std::vector<Edge> edges_;
  std::vector<FreeLoop> loops_;
  std::vector<int> slot_edge_;
  std::vector<int> slot_end_;
  bool slots_ok_ = true;
};

bool operator==(const Crossing& a, const Crossing& b);
bool operator==(const Edge& a, const Edge& b);
bool operator==(const FreeLoop& a, const FreeLoop& b);

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> advisories;
  bool ok() const { return violations.empty(); }
};

/// One boundary step of a face: leave `from`, arrive at the corner `corner`
/// (the corner sits between corner.slot and corner.slot + 1).
struct FaceStep {
  Dart from;
  Dart corner;
};

struct Face {
  int id = 0;
  std::vector<FaceStep> boundary;
  BoundaryWord holonomy;
};

struct Thread {
  int id = 0;
  /// Entry darts in traversal order; the strand leaves through entry.opposite().
  std::vector<Dart> route;
  HomologyVector homology;
  /// Index into SurfaceDiagram::loops() for crossingless components, else -1.
  int free_loop = -1;
  int tag = -1;
};

struct ThreadSet {
  HomologyVector direction;
  std::vector<int> threads;
};

struct CrossingList {
  bool ok = true;
  std::vector<int> crossings;
};

ValidationReport validate(const SurfaceDiagram& d);
bool is_connected(const SurfaceDiagram& d);

/// Faces traced by arriving at a slot and turning to the next slot counterclockwise.
std::vector<Face> faces(const SurfaceDiagram& d);
/// Face id of every corner, indexed by Dart::index().
std::vector<int> corner_faces(const SurfaceDiagram& d, const std::vector<Face>& fs);

std::vector<Thread> threads(const SurfaceDiagram& d);
/// Thread index owning each dart (both the entry and exit slots), by Dart::index().
std::vector<int> dart_threads(const SurfaceDiagram& d, const std::vector<Thread>& ts);
std::vector<ThreadSet> thread_sets(const SurfaceDiagram& d);
std::vector<ThreadSet> thread_sets(const SurfaceDiagram& d, const std::vector<Thread>& ts);

bool is_alternating(const SurfaceDiagram& d);
CrossingList is_proper(const SurfaceDiagram& d);
CrossingList is_reduced(const SurfaceDiagram& d);

/// Rotates each crossing frame so that the over-strand runs along slots 1-3.
SurfaceDiagram orient_crossings(const SurfaceDiagram& d);
/// Relabels the slots of crossing c: old slot s becomes slot s + k.
SurfaceDiagram rotate_crossing(const SurfaceDiagram& d, int c, int k);

/// Assigns every edge and free loop the index of its thread as tag.
SurfaceDiagram label_threads(const SurfaceDiagram& d);

/// True when the word is trivial on the surface: zero abelianization for g = 1;
/// for g >= 2 a freely trivial word or a conjugate of the cell relator
/// a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1 or its inverse.
bool trivial_holonomy(const BoundaryWord& w, int genus);
/// Stricter: zero abelianization for g = 1, the empty word for g >= 2.
bool empty_holonomy(const BoundaryWord& w, int genus);

enum class Resolution : std::uint8_t {
  Keep,
  Straight,  // pairs (0,2), (1,3)
  Pair01,    // pairs (0,1), (2,3)
  Pair12,    // pairs (1,2), (3,0)
};

/// Slot joined to `slot` by the resolution.
int resolved_mate(Resolution r, int slot);

/// The A-smoothing of a crossing, relative to its own over-axis.
Resolution a_smoothing(OverAxis over);
Resolution b_smoothing(OverAxis over);

/// Removes every crossing whose resolution is not Keep, reconnecting its
/// slots as the resolution says. Kept crossings keep their relative order;
/// closed curves with no remaining crossing become free loops.
SurfaceDiagram dissolve(const SurfaceDiagram& d, std::span<const Resolution> resolution);

/// Label-independent canonical encoding; equal strings iff the diagrams are
/// isomorphic as decorated maps (same over/under, same edge words).
std::string canonical_encoding(const SurfaceDiagram& d);
bool isomorphic(const SurfaceDiagram& a, const SurfaceDiagram& b);

}  // namespace weave
