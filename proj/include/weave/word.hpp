#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weave {

using HomologyVector = std::vector<std::int64_t>;

/// Word in the side-identification letters a_1..a_g, b_1..b_g of the unit cell.
///
/// Letters are stored as signed integers: a_i is +i, b_i is +(g+i), and a
/// negative value is the formal inverse. Words are kept freely reduced.
class BoundaryWord {
 public:
  BoundaryWord() = default;
  explicit BoundaryWord(std::vector<int> letters);

  static BoundaryWord power(int letter, std::int64_t exponent);

  const std::vector<int>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  BoundaryWord inverse() const;
  BoundaryWord operator*(const BoundaryWord& rhs) const;
  BoundaryWord& operator*=(const BoundaryWord& rhs);

  /// Intersection counts with the alpha/beta curves, as a vector in Z^{2g}.
  HomologyVector abelianize(int genus) const;

  /// Letter-by-letter substitution; `images[i]` is the image of letter i+1.
  BoundaryWord substitute(const std::vector<BoundaryWord>& images) const;

  std::string to_string(int genus) const;

  bool operator==(const BoundaryWord&) const = default;
  auto operator<=>(const BoundaryWord&) const = default;

 private:
  void reduce();
  std::vector<int> letters_;
};

/// Parses "aB", "a1b2A1", "" etc. Throws ParseError on letters outside the genus.
BoundaryWord parse_word(std::string_view text, int genus);

bool is_zero(const HomologyVector& v);
HomologyVector operator+(const HomologyVector& a, const HomologyVector& b);
HomologyVector operator-(const HomologyVector& v);

/// Representative of {v, -v}: first nonzero entry positive.
HomologyVector normalize_sign(HomologyVector v);

/// v divided by the gcd of its entries, then sign-normalized.
HomologyVector primitive_direction(const HomologyVector& v);

}  // namespace weave
