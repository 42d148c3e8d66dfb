#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "weave/diagram_io.hpp"
#include "weave/errors.hpp"
#include "weave/moves.hpp"

namespace weave {
namespace {

using testing::corner_walk_face_sizes;
using testing::plain_weave;

SurfaceDiagram torus_curl() { return testing::corpus_diagram("torus_c1"); }

bool has_text(const std::vector<std::string>& v, const std::string& needle) {
  return std::any_of(v.begin(), v.end(), [&](const auto& s) { return s.find(needle) != std::string::npos; });
}

TEST(Validate, EmptyDiagramIsAdvisoryOnly) {
  const auto r = validate(SurfaceDiagram(1));
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(has_text(r.advisories, "no crossings"));
}

TEST(Validate, PlainWeaveIsClean) {
  const auto d = plain_weave();
  const auto r = validate(d);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.advisories.empty());
  EXPECT_EQ(static_cast<int>(faces(d).size()), d.crossing_count() + 2 - 2 * d.genus());
}

TEST(Validate, SlotDoubleUse) {
  const auto d = parse_diagram(
      "genus 1\ncrossing c0 over=13\nedge c0.0 c0.2 word=a\nedge c0.0 c0.3 word=b\n");
  const auto r = validate(d);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(has_text(r.violations, "slot double-use"));
  EXPECT_FALSE(d.slots_well_formed());
}

TEST(Faces, PlainWeaveHasFourQuadrilaterals) {
  const auto fs = faces(plain_weave());
  ASSERT_EQ(fs.size(), 4u);
  for (const auto& f : fs) EXPECT_EQ(f.boundary.size(), 4u);
  auto oracle = corner_walk_face_sizes(plain_weave());
  EXPECT_EQ(oracle, (std::vector<int>{4, 4, 4, 4}));
}

TEST(Faces, TorusCurlHasOneFace) {
  const auto d = torus_curl();
  EXPECT_EQ(faces(d).size(), 1u);
  EXPECT_EQ(corner_walk_face_sizes(d).size(), 1u);
  EXPECT_TRUE(validate(d).ok());
}

TEST(Faces, CornerFacesCoverEveryCorner) {
  const auto d = plain_weave();
  const auto fs = faces(d);
  const auto cf = corner_faces(d, fs);
  ASSERT_EQ(cf.size(), 16u);
  for (int f : cf) EXPECT_GE(f, 0);
}

TEST(Threads, PlainWeave) {
  const auto ts = threads(plain_weave());
  ASSERT_EQ(ts.size(), 4u);
  int horizontal = 0, vertical = 0;
  for (const auto& t : ts) {
    const auto h = normalize_sign(t.homology);
    if (h == HomologyVector{1, 0}) ++horizontal;
    if (h == HomologyVector{0, 1}) ++vertical;
  }
  EXPECT_EQ(horizontal, 2);
  EXPECT_EQ(vertical, 2);
  const auto sets = thread_sets(plain_weave());
  ASSERT_EQ(sets.size(), 2u);
  for (const auto& s : sets) EXPECT_EQ(s.threads.size(), 2u);
}

TEST(Threads, CrossinglessLoops) {
  const SurfaceDiagram one(1, {}, {}, {FreeLoop{parse_word("a", 1), -1}});
  const auto ts = threads(one);
  ASSERT_EQ(ts.size(), 1u);
  EXPECT_EQ(ts[0].homology, (HomologyVector{1, 0}));

  const SurfaceDiagram two(1, {}, {}, {FreeLoop{parse_word("a", 1), -1}, FreeLoop{parse_word("a", 1), -1}});
  const auto sets = thread_sets(two);
  ASSERT_EQ(sets.size(), 1u);
  EXPECT_EQ(sets[0].threads.size(), 2u);
}

TEST(Threads, NullHomologousLoopThrows) {
  const SurfaceDiagram d(1, {}, {}, {FreeLoop{parse_word("a", 1), -1}, FreeLoop{BoundaryWord{}, -1}});
  EXPECT_THROW(thread_sets(d), ZeroHomologyThread);
}

TEST(Predicates, Alternating) {
  EXPECT_TRUE(is_alternating(plain_weave()));
  EXPECT_TRUE(is_alternating(SurfaceDiagram(1)));
  auto cs = plain_weave().crossings();
  cs[0].over = cs[0].over == OverAxis::Axis02 ? OverAxis::Axis13 : OverAxis::Axis02;
  EXPECT_FALSE(is_alternating(plain_weave().with_crossings(cs)));
}

TEST(Predicates, ProperAndReduced) {
  const auto p = is_proper(plain_weave());
  EXPECT_TRUE(p.ok);
  EXPECT_TRUE(p.crossings.empty());
  const auto r = is_reduced(plain_weave());
  EXPECT_TRUE(r.ok);

  // Opposite corners of the single crossing share the face, separated by a
  // nontrivial loop: reduced on the surface, but not proper.
  const auto curl = torus_curl();
  EXPECT_FALSE(is_proper(curl).ok);
  EXPECT_FALSE(is_proper(curl).crossings.empty());
  EXPECT_TRUE(is_reduced(curl).ok);
}

TEST(Predicates, R1CurlIsAnIsthmus) {
  const auto d = plain_weave();
  Move m;
  m.kind = MoveKind::R1_add;
  m.edge = 0;
  m.sign = 1;
  const auto e = apply_move(d, m);
  const auto r = is_reduced(e);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.crossings, (std::vector<int>{d.crossing_count()}));
}

TEST(Orientation, Axis13IsUnchanged) {
  const auto d = parse_diagram("genus 1\ncrossing c0 over=13\nedge c0.0 c0.2 word=a\nedge c0.1 c0.3 word=b\n");
  EXPECT_EQ(orient_crossings(d), d);
}

TEST(Orientation, Axis02RotatesOneStep) {
  const auto d = parse_diagram("genus 1\ncrossing c0 over=02\nedge c0.0 c0.2 word=a\nedge c0.1 c0.3 word=b\n");
  const auto o = orient_crossings(d);
  EXPECT_EQ(o.crossings()[0].over, OverAxis::Axis13);
  EXPECT_TRUE(o.over_at({0, 1}));
  EXPECT_EQ(o.word_from({0, 1}), parse_word("a", 1));
}

TEST(Orientation, PlainWeaveIsomorphic) {
  const auto o = orient_crossings(plain_weave());
  for (const auto& c : o.crossings()) EXPECT_EQ(c.over, OverAxis::Axis13);
  EXPECT_TRUE(isomorphic(o, plain_weave()));
}

TEST(Holonomy, TrivialityRules) {
  EXPECT_TRUE(trivial_holonomy(parse_word("abAB", 1), 1));
  EXPECT_FALSE(trivial_holonomy(parse_word("a", 1), 1));
  EXPECT_TRUE(trivial_holonomy(parse_word("a1b1A1B1a2b2A2B2", 2), 2));
  EXPECT_TRUE(trivial_holonomy(parse_word("b1A1B1a2b2A2B2a1", 2), 2));
  EXPECT_FALSE(trivial_holonomy(parse_word("a1b1A1B1", 2), 2));
  EXPECT_TRUE(empty_holonomy(BoundaryWord{}, 2));
  EXPECT_FALSE(empty_holonomy(parse_word("a1b1A1B1a2b2A2B2", 2), 2));
}

TEST(Dissolve, StraightResolutionOfCurlGivesLoops) {
  const auto d = torus_curl();
  const std::vector<Resolution> res{Resolution::Straight};
  const auto out = dissolve(d, res);
  EXPECT_EQ(out.crossing_count(), 0);
  EXPECT_EQ(out.loops().size(), 2u);
}

TEST(Isomorphism, RelabelledCrossings) {
  const auto d = plain_weave();
  const auto r = rotate_crossing(d, 2, 2);
  EXPECT_TRUE(isomorphic(d, r));
  EXPECT_EQ(canonical_encoding(d), canonical_encoding(r));
}

}  // namespace
}  // namespace weave
