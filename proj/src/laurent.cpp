#include "vkc/laurent.hpp"

#include <stdexcept>

namespace vkc {

namespace {

using Coeff = LaurentPolynomial::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Laurent coefficient overflow");
  return r;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::from_terms(const std::vector<std::pair<int, Coeff>>& terms) {
  LaurentPolynomial p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::loop_value() { return from_terms({{2, -1}, {-2, -1}}); }

void LaurentPolynomial::add_term(int exponent, Coeff coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

Coeff LaurentPolynomial::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<std::pair<int, Coeff>> LaurentPolynomial::descending() const {
  return {terms_.rbegin(), terms_.rend()};
}

LaurentPolynomial LaurentPolynomial::reflected() const {
  LaurentPolynomial p;
  for (auto [e, c] : terms_) p.terms_[-e] = c;
  return p;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned n) const {
  LaurentPolynomial result(1);
  LaurentPolynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p;
  p -= *this;
  return p;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial p;
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) p.add_term(ea + eb, checked_mul(ca, cb));
  return p;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += 'A';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace vkc
