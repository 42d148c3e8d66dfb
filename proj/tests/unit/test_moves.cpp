#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "weave/errors.hpp"
#include "weave/moves.hpp"

namespace weave {
namespace {

using testing::plain_weave;

int count_kind(const std::vector<Move>& ms, MoveKind k) {
  return static_cast<int>(std::count_if(ms.begin(), ms.end(), [&](const Move& m) { return m.kind == k; }));
}

Move first_of(const SurfaceDiagram& d, MoveKind k) {
  for (const auto& m : enumerate_moves(d))
    if (m.kind == k) return m;
  throw std::runtime_error("no move of that kind");
}

TEST(Enumerate, PlainWeaveHasNoRemoves) {
  const auto ms = enumerate_moves(plain_weave());
  EXPECT_EQ(count_kind(ms, MoveKind::R1_remove), 0);
  EXPECT_EQ(count_kind(ms, MoveKind::R2_remove), 0);
  EXPECT_GT(count_kind(ms, MoveKind::R1_add), 0);
  EXPECT_GT(count_kind(ms, MoveKind::R2_add), 0);
}

TEST(Enumerate, R2AddExposesItsInverse) {
  const auto d = plain_weave();
  const auto e = apply_move(d, first_of(d, MoveKind::R2_add));
  EXPECT_EQ(e.crossing_count(), d.crossing_count() + 2);
  // Other bigons may appear next to the new one; exactly one joins the two new crossings.
  std::vector<Move> at_new;
  for (const auto& m : enumerate_moves(e)) {
    if (m.kind != MoveKind::R2_remove) continue;
    if (std::all_of(m.darts.begin(), m.darts.end(), [&](Dart x) { return x.crossing >= d.crossing_count(); }))
      at_new.push_back(m);
  }
  ASSERT_EQ(at_new.size(), 1u);
  EXPECT_TRUE(isomorphic(apply_move(e, at_new[0]), d));
}

TEST(Enumerate, WrappingMonogonIsNotRemovable) {
  // A single crossing whose slots 0 and 1 are joined by an edge wrapping around a.
  const auto d = testing::corpus_diagram("torus_c1");
  const auto ms = enumerate_moves(d);
  EXPECT_EQ(count_kind(ms, MoveKind::R1_remove), 0);
  EXPECT_EQ(count_kind(ms, MoveKind::R2_remove), 0);
}

TEST(Apply, R1AddThenRemove) {
  const auto d = plain_weave();
  for (int sign : {1, -1}) {
    Move m;
    m.kind = MoveKind::R1_add;
    m.edge = 3;
    m.sign = sign;
    const auto e = apply_move(d, m);
    EXPECT_EQ(e.crossing_count(), d.crossing_count() + 1);
    EXPECT_TRUE(validate(e).ok());
    EXPECT_TRUE(isomorphic(apply_move(e, first_of(e, MoveKind::R1_remove)), d));
  }
}

TEST(Apply, R3IsAnInvolution) {
  // Create a triangle with an R2 move next to a third strand, then find an R3 site.
  auto d = plain_weave();
  bool tested = false;
  for (const auto& m : enumerate_moves(d)) {
    if (m.kind != MoveKind::R2_add) continue;
    const auto e = apply_move(d, m);
    for (const auto& r : enumerate_moves(e)) {
      if (r.kind != MoveKind::R3) continue;
      const auto f = apply_move(e, r);
      EXPECT_TRUE(validate(f).ok());
      EXPECT_EQ(f.crossing_count(), e.crossing_count());
      // The reconfigured triangle is again an R3 site; applying it restores e.
      bool restored = false;
      for (const auto& back : enumerate_moves(f))
        if (back.kind == MoveKind::R3 && isomorphic(apply_move(f, back), e)) restored = true;
      EXPECT_TRUE(restored) << format_move(r);
      tested = true;
      break;
    }
    if (tested) break;
  }
  EXPECT_TRUE(tested);
}

TEST(Apply, IllegalSite) {
  Move m;
  m.kind = MoveKind::R1_remove;
  m.darts = {{0, 0}};
  EXPECT_THROW(apply_move(plain_weave(), m), IllegalMove);
}

TEST(Format, RoundTrip) {
  const auto d = plain_weave();
  for (const auto& m : enumerate_moves(d)) EXPECT_EQ(parse_move(format_move(m)), m) << format_move(m);
  EXPECT_THROW(parse_move("R9 c0.0"), ParseError);
}

TEST(Gauge, PreservesFaceHolonomyClass) {
  const auto d = plain_weave();
  const auto g = gauge(d, 0, parse_word("ab", 1));
  EXPECT_TRUE(validate(g).ok());
  EXPECT_EQ(bracket(g), bracket(d));
}

TEST(Fuzz, ZeroStepsAndDeterminism) {
  const auto d = plain_weave();
  const auto t0 = fuzz(d, 0, 5, 12);
  EXPECT_TRUE(t0.moves.empty());
  EXPECT_EQ(replay(d, t0), d);
  const auto a = fuzz(d, 50, 9, 12), b = fuzz(d, 50, 9, 12);
  EXPECT_EQ(format_trace(a), format_trace(b));
  const auto many = fuzz_many(d, 50, {9, 10}, 12, 2);
  ASSERT_EQ(many.size(), 2u);
  EXPECT_EQ(format_trace(many[0]), format_trace(a));
}

TEST(Fuzz, TraceRoundTrip) {
  const auto d = plain_weave();
  const auto t = fuzz(d, 40, 3, 12);
  const auto p = parse_trace(format_trace(t));
  EXPECT_EQ(p.seed, t.seed);
  EXPECT_EQ(p.moves, t.moves);
  EXPECT_EQ(replay(d, p), replay(d, t));
}

TEST(Fuzz, KauffmanFPreserved) {
  const auto d = plain_weave();
  const auto t = fuzz(d, 200, 11, 20);
  const auto all = replay_all(d, t);
  const auto f = kauffman_f(d);
  for (const auto& x : all) {
    ASSERT_LE(x.crossing_count(), 20);
    EXPECT_TRUE(validate(x).ok());
  }
  EXPECT_EQ(kauffman_f(all.back()), f);
}

TEST(Simplify, ReturnsToMinimum) {
  const auto d = plain_weave();
  auto grown = d;
  for (int i = 0; i < 5; ++i) {
    std::vector<Move> adds;
    for (const auto& m : enumerate_moves(grown))
      if (m.kind == MoveKind::R1_add || m.kind == MoveKind::R2_add) adds.push_back(m);
    grown = apply_move(grown, adds[static_cast<std::size_t>(i * 7) % adds.size()]);
  }
  EXPECT_GT(grown.crossing_count(), d.crossing_count());
  const auto b = crossing_number_bounds(grown);
  EXPECT_EQ(b.lower, 4);
  EXPECT_TRUE(b.lower_certified);
  EXPECT_EQ(b.upper, 4);
}

TEST(Bounds, PlainWeave) {
  const auto b = crossing_number_bounds(plain_weave());
  EXPECT_EQ(b.lower, 4);
  EXPECT_EQ(b.upper, 4);
  EXPECT_TRUE(b.lower_certified);
}

TEST(Bounds, WindingOnlyIsNotCertified) {
  const SurfaceDiagram d(1, {}, {}, {FreeLoop{parse_word("a", 1), -1}});
  const auto b = crossing_number_bounds(d);
  EXPECT_FALSE(b.lower_certified);
  EXPECT_EQ(b.upper, 0);
}

}  // namespace
}  // namespace weave
