#include <gtest/gtest.h>

#include "weave/errors.hpp"
#include "weave/invariants.hpp"
#include "weave/tessellation.hpp"

namespace weave {
namespace {

PeriodicTiling tiling(const char* sym, int scale) { return build_tiling(parse_vertex_symbol(sym, true), scale); }

SurfaceDiagram skeleton(const char* sym, int scale, const char* method, int m) {
  return transform(tiling(sym, scale), parse_method(method, m));
}

TEST(VertexSymbol, SquareTiling) {
  const auto s = parse_vertex_symbol("(4,4,4,4)");
  EXPECT_EQ(s.faces, (std::vector<int>{4, 4, 4, 4}));
  EXPECT_TRUE(s.euclidean);
}

TEST(VertexSymbol, CanonicalRotation) {
  EXPECT_EQ(parse_vertex_symbol("(6,3,6,3)").faces, (std::vector<int>{3, 6, 3, 6}));
}

TEST(VertexSymbol, Errors) {
  EXPECT_THROW(parse_vertex_symbol("(3,2,1)"), SyntaxError);
  EXPECT_THROW(parse_vertex_symbol("4,4,4,4"), SyntaxError);
  const auto h = parse_vertex_symbol("(5,5,5,5)");
  EXPECT_FALSE(h.euclidean);
  EXPECT_THROW(parse_vertex_symbol("(5,5,5,5)", true), InfeasibleSymbol);
}

TEST(Tiling, SquarePrimitiveCell) {
  const auto t = tiling("(4,4,4,4)", 1);
  EXPECT_EQ(t.vertices.size(), 1u);
  EXPECT_EQ(t.edges.size(), 2u);
  EXPECT_EQ(t.face_count, 1);
  EXPECT_EQ(static_cast<int>(t.vertices.size()) - static_cast<int>(t.edges.size()) + t.face_count, 0);
}

TEST(Tiling, KagomePrimitiveCell) {
  const auto t = tiling("(3,6,3,6)", 1);
  EXPECT_EQ(t.vertices.size(), 3u);
  EXPECT_EQ(t.edges.size(), 6u);
  EXPECT_EQ(t.face_count, 3);
}

TEST(Tiling, EulerAtEveryScale) {
  for (const char* s : {"(4,4,4,4)", "(3,3,3,3,3,3)", "(6,6,6)", "(3,6,3,6)"})
    for (int k = 1; k <= 3; ++k) {
      const auto t = tiling(s, k);
      EXPECT_EQ(static_cast<int>(t.vertices.size()) - static_cast<int>(t.edges.size()) + t.face_count, 0) << s << k;
    }
}

TEST(Tiling, HyperbolicIsUnsupported) {
  EXPECT_THROW(build_tiling(parse_vertex_symbol("(5,5,5,5)"), 1), UnsupportedTiling);
}

TEST(Transform, PlainWeaveSkeleton) {
  const auto d = skeleton("(4,4,4,4)", 2, "Cr", 1);
  EXPECT_EQ(d.crossing_count(), 4);
  EXPECT_TRUE(validate(d).ok());
  EXPECT_EQ(classify(d), Classification::Weave);
}

TEST(Transform, CrossedAndBranchedSquareWeavesAgree) {
  // Both are the square grid of threads: two orthogonal thread sets, the diagonal cell is a quotient of the straight one.
  for (const auto& d : {skeleton("(4,4,4,4)", 2, "Cr", 1), skeleton("(4,4,4,4)", 1, "4Br", 1)}) {
    EXPECT_EQ(classify(d), Classification::Weave);
    const auto sets = thread_sets(d);
    ASSERT_EQ(sets.size(), 2u);
    EXPECT_NE(sets[0].direction, sets[1].direction);
  }
}

TEST(Transform, BranchedTwoTwistIsPolycatenane) {
  const auto d = skeleton("(4,4,4,4)", 1, "4Br", 2);
  EXPECT_EQ(classify(d), Classification::Polycatenane);
  for (const auto& t : threads(d)) EXPECT_TRUE(is_zero(t.homology));
}

TEST(Transform, OddValencyCr) {
  EXPECT_THROW(skeleton("(6,6,6)", 1, "Cr", 1), OddValencyForCr);
}

TEST(Transform, MethodParsing) {
  EXPECT_EQ(parse_method("4Cr", 1).valency, 4);
  EXPECT_EQ(parse_method("nBr", 2).method, Method::nBr);
  EXPECT_THROW(parse_method("Xx", 1), SyntaxError);
  EXPECT_THROW(skeleton("(4,4,4,4)", 1, "3Br", 1), SyntaxError);
}

TEST(Classify, Mixed) {
  const SurfaceDiagram d(1, {}, {}, {FreeLoop{parse_word("a", 1), -1}, FreeLoop{BoundaryWord{}, -1}});
  EXPECT_EQ(classify(d), Classification::Mixed);
}

TEST(WeavingMap, PlainWeaveAlternates) {
  const auto d = assign_weaving_map(skeleton("(4,4,4,4)", 2, "Cr", 1), parse_sequence("1,2:1,1"));
  EXPECT_TRUE(is_alternating(d));
  EXPECT_EQ(degree_stats(d).span, 12);
}

TEST(WeavingMap, TwillNeedsPeriodFour) {
  EXPECT_THROW(assign_weaving_map(skeleton("(4,4,4,4)", 2, "Cr", 1), parse_sequence("1,2:2,2")),
               InconsistentSequence);
  const auto d = assign_weaving_map(skeleton("(4,4,4,4)", 4, "Cr", 1), parse_sequence("1,2:2,2"));
  EXPECT_EQ(d.crossing_count(), 16);
  EXPECT_FALSE(is_alternating(d));
  // Along every thread: two over, two under, cyclically.
  for (const auto& t : threads(d)) {
    std::string pattern;
    for (const auto& x : t.route) pattern += d.over_at(x) ? 'O' : 'U';
    const std::string twice = pattern + pattern;
    EXPECT_TRUE(twice.find("OOUU") != std::string::npos) << pattern;
    EXPECT_EQ(twice.find("OOO"), std::string::npos) << pattern;
    EXPECT_EQ(twice.find("UUU"), std::string::npos) << pattern;
  }
}

TEST(WeavingMap, SequenceParsing) {
  const auto s = parse_sequence("1,2:2,1;1,3:1,1");
  EXPECT_EQ(s.get(1, 2), (std::pair{2, 1}));
  EXPECT_EQ(s.get(2, 1), (std::pair{1, 2}));
  EXPECT_TRUE(parse_sequence("alt").alternate_all);
  EXPECT_THROW(parse_sequence("1,2:x"), SyntaxError);
}

}  // namespace
}  // namespace weave
