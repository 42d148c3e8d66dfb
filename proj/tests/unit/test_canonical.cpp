#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "weave/canonical.hpp"
#include "weave/errors.hpp"

namespace weave {
namespace {

using testing::plain_weave;

TEST(Q, Examples) {
  EXPECT_EQ(q_functional({}), 0);
  EXPECT_EQ(q_functional({{0, 2}}), 4);
  EXPECT_EQ(q_functional({{1, 0}, {0, 1}, {1, 1}}), 4);
}

TEST(Twist, IdentityAndShear) {
  const WindingSet v{{1, 1}, {2, -1}};
  EXPECT_EQ(apply_twist(v, identity_matrix(2)), v);
  EXPECT_EQ(apply_twist({{1, 1}}, {{1, 1}, {0, 1}}), (WindingSet{{1, 2}}));
  EXPECT_THROW(apply_twist(v, {{2, 0}, {0, 1}}), NonSymplectic);
}

TEST(Twist, QMatchesQuadraticForm) {
  const WindingSet v{{1, 2}, {3, -1}};
  const IntMatrix u{{2, 1}, {1, 1}};
  std::int64_t direct = 0;
  for (const auto& x : v) {
    // x U U^T x^T
    const std::int64_t y0 = x[0] * u[0][0] + x[1] * u[1][0], y1 = x[0] * u[0][1] + x[1] * u[1][1];
    direct += y0 * y0 + y1 * y1;
  }
  EXPECT_EQ(q_functional(apply_twist(v, u)), direct);
}

TEST(Symplectic, GenusTwo) {
  EXPECT_TRUE(is_symplectic(identity_matrix(4)));
  IntMatrix t = identity_matrix(4);
  t[0][2] = 1;  // a1 -> a1 + b1
  EXPECT_TRUE(is_symplectic(t));
  IntMatrix bad = identity_matrix(4);
  bad[0][1] = 1;
  EXPECT_FALSE(is_symplectic(bad));
}

TEST(Canonical, Empty) {
  const auto c = canonical_form({}, 1);
  EXPECT_TRUE(c.set.empty());
  EXPECT_EQ(c.u, identity_matrix(2));
  EXPECT_EQ(c.q_after, 0);
}

TEST(Canonical, DoubledVector) {
  const auto c = canonical_form({{0, 2}}, 1);
  EXPECT_EQ(c.q_after, 4);
  EXPECT_EQ(c.set, (WindingSet{{2, 0}}));
  EXPECT_TRUE(c.certified);
}

TEST(Canonical, PrimitiveVector) {
  const auto c = canonical_form({{5, 3}}, 1);
  EXPECT_EQ(c.q_before, 34);
  EXPECT_EQ(c.q_after, 1);
  EXPECT_EQ(c.set, (WindingSet{{1, 0}}));
  EXPECT_EQ(testing::sorted_normalized(apply_twist({{5, 3}}, c.u)), c.set);
}

TEST(Canonical, MatchesBruteForceOnSmallSets) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-3, 3), count(1, 3);
  for (int trial = 0; trial < 10; ++trial) {
    WindingSet v;
    for (int i = count(rng); i > 0; --i) v.push_back({entry(rng), entry(rng)});
    const auto c = canonical_form(v, 1);
    const auto b = testing::brute_force_canonical(v, 3);
    EXPECT_EQ(c.q_after, b.q);
    EXPECT_EQ(c.set, b.best_set);
  }
}

TEST(Canonical, GenusTwoDescends) {
  const WindingSet v{{1, 0, 3, 0}, {0, 2, 0, 1}};
  const auto c = canonical_form(v, 2);
  EXPECT_FALSE(c.certified);
  EXPECT_LE(c.q_after, c.q_before);
  EXPECT_TRUE(is_symplectic(c.u));
  EXPECT_EQ(testing::sorted_normalized(apply_twist(v, c.u)), c.set);
}

TEST(DehnTwist, InverseRestoresWords) {
  const auto d = plain_weave();
  for (auto curve : {TwistCurve::Alpha, TwistCurve::Beta}) {
    const auto back = dehn_twist_diagram(dehn_twist_diagram(d, curve, 1), curve, -1);
    EXPECT_EQ(back, d);
  }
}

TEST(DehnTwist, ThreadHomologiesTransform) {
  const auto d = plain_weave();
  for (auto curve : {TwistCurve::Alpha, TwistCurve::Beta})
    for (int dir : {1, -1}) {
      const auto t = dehn_twist_diagram(d, curve, dir);
      const auto m = twist_matrix(curve, dir);
      const auto before = threads(d), after = threads(t);
      ASSERT_EQ(before.size(), after.size());
      for (std::size_t i = 0; i < before.size(); ++i)
        EXPECT_EQ(normalize_sign(after[i].homology), normalize_sign(apply_twist({before[i].homology}, m)[0]));
    }
}

TEST(DehnTwist, BracketKeysTransform) {
  const auto d = plain_weave();
  const auto m = twist_matrix(TwistCurve::Alpha, 1);
  std::set<WindingKey> expected, got;
  for (const auto& [k, p] : bracket(d)) expected.insert(testing::sorted_normalized(apply_twist(k, m)));
  for (const auto& [k, p] : bracket(dehn_twist_diagram(d, TwistCurve::Alpha, 1))) got.insert(k);
  EXPECT_EQ(got, expected);
}

TEST(DehnTwist, GenusTwoUnsupported) {
  EXPECT_THROW(dehn_twist_diagram(testing::corpus_diagram("g2_c4_mixed_1"), TwistCurve::Alpha, 1), UnsupportedGenus);
}

TEST(Size, PlainWeave) {
  const auto d = plain_weave();
  EXPECT_EQ(size(d), 4);
  EXPECT_TRUE(has_translation_symmetry(d));
  EXPECT_FALSE(is_minimal_size(d));
}

TEST(Size, TwillIsNotMinimal) { EXPECT_FALSE(is_minimal_size(testing::corpus_diagram("square_cr_k4_twill"))); }

TEST(Size, PrimitiveCellsAreMinimal) {
  EXPECT_TRUE(is_minimal_size(testing::corpus_diagram("kagome_cr_k1_alt")));
  EXPECT_TRUE(is_minimal_size(testing::corpus_diagram("square_4br1_k1")));
}

}  // namespace
}  // namespace weave
