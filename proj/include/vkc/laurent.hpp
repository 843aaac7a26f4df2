#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vkc {

/// Integer-coefficient Laurent polynomial in A. Zero coefficients are never
/// stored; arithmetic throws std::overflow_error instead of wrapping.
class LaurentPolynomial {
 public:
  using Coeff = int64_t;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(Coeff constant) { add_term(0, constant); }
  static LaurentPolynomial monomial(Coeff coeff, int exponent) {
    LaurentPolynomial p;
    p.add_term(exponent, coeff);
    return p;
  }
  static LaurentPolynomial from_terms(const std::vector<std::pair<int, Coeff>>& terms);

  /// (-A^2 - A^-2)
  static LaurentPolynomial loop_value();

  void add_term(int exponent, Coeff coeff);
  Coeff coefficient(int exponent) const;
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<int, Coeff>& terms() const noexcept { return terms_; }
  /// Terms by descending exponent.
  std::vector<std::pair<int, Coeff>> descending() const;

  /// A -> A^-1.
  LaurentPolynomial reflected() const;
  LaurentPolynomial pow(unsigned n) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// e.g. "-A^3", "1", "-A^2 - A^-2", "2A - A^-1", "0".
  std::string to_string() const;

 private:
  std::map<int, Coeff> terms_;
};

}  // namespace vkc
