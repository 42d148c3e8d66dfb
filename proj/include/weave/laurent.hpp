#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace weave {

/// Sparse integer Laurent polynomial in one variable. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, std::int64_t>;

  LaurentPoly() = default;
  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }
  /// The loop value -A^2 - A^-2.
  static LaurentPoly loop_value();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(int exponent) const;
  int max_degree() const;  // requires !is_zero()
  int min_degree() const;
  int span() const { return is_zero() ? 0 : max_degree() - min_degree(); }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly pow(int n) const;  // n >= 0
  /// Multiplies by x^k.
  LaurentPoly shifted(int k) const;
  /// Substitutes x -> x^k (k may be negative).
  LaurentPoly rescaled(int k) const;

  bool operator==(const LaurentPoly&) const = default;

  /// "c A^e" terms, exponent descending, joined by " + "; "0" when zero.
  std::string to_string(const std::string& var = "A") const;

 private:
  void add_term(int exponent, std::int64_t c);
  Terms terms_;
};

}  // namespace weave
