#include <gtest/gtest.h>

#include "weave/errors.hpp"
#include "weave/word.hpp"

namespace weave {
namespace {

TEST(BoundaryWord, ParsesAndPrintsGenusOne) {
  const auto w = parse_word("aBa", 1);
  EXPECT_EQ(w.letters(), (std::vector<int>{1, -2, 1}));
  EXPECT_EQ(w.to_string(1), "aBa");
}

TEST(BoundaryWord, ParsesIndexedLetters) {
  const auto w = parse_word("a1b2A1", 2);
  EXPECT_EQ(w.letters(), (std::vector<int>{1, 4, -1}));
  EXPECT_EQ(w.to_string(2), "a1b2A1");
}

TEST(BoundaryWord, RejectsBadLetters) {
  EXPECT_THROW(parse_word("ac", 1), ParseError);
  EXPECT_THROW(parse_word("a3", 2), ParseError);
  EXPECT_THROW(parse_word("a", 2), ParseError);
}

TEST(BoundaryWord, FreeReductionOnProduct) {
  const auto w = parse_word("ab", 1) * parse_word("BA", 1);
  EXPECT_TRUE(w.empty());
  EXPECT_EQ(parse_word("aAb", 1), parse_word("b", 1));
}

TEST(BoundaryWord, InverseAndPower) {
  const auto w = parse_word("aab", 1);
  EXPECT_TRUE((w * w.inverse()).empty());
  EXPECT_EQ(BoundaryWord::power(2, -3).to_string(1), "BBB");
}

TEST(BoundaryWord, Abelianize) {
  EXPECT_EQ(parse_word("abAb", 1).abelianize(1), (HomologyVector{0, 2}));
  EXPECT_EQ(parse_word("a2B1", 2).abelianize(2), (HomologyVector{0, 1, -1, 0}));
}

TEST(BoundaryWord, SubstituteIsHomomorphism) {
  const std::vector<BoundaryWord> images{parse_word("a", 1), parse_word("ba", 1)};
  const auto u = parse_word("ab", 1), v = parse_word("Ba", 1);
  EXPECT_EQ((u * v).substitute(images), u.substitute(images) * v.substitute(images));
}

TEST(Homology, NormalizeAndPrimitive) {
  EXPECT_EQ(normalize_sign({0, -2}), (HomologyVector{0, 2}));
  EXPECT_EQ(normalize_sign({-1, 3}), (HomologyVector{1, -3}));
  EXPECT_EQ(primitive_direction({-4, 6}), (HomologyVector{2, -3}));
  EXPECT_TRUE(is_zero({0, 0}));
}

}  // namespace
}  // namespace weave
