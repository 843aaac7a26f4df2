#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "vkc/laurent.hpp"
#include "vkc/rng.hpp"

using namespace vkc;
using P = LaurentPolynomial;

TEST_CASE("text form") {
  CHECK(P::monomial(-1, 3).to_string() == "-A^3");
  CHECK(P(1).to_string() == "1");
  CHECK(P::loop_value().to_string() == "-A^2 - A^-2");
  CHECK(P::from_terms({{1, 2}, {-1, -1}}).to_string() == "2A - A^-1");
  CHECK(P().to_string() == "0");
  CHECK(P::from_terms({{-4, 1}, {-12, 1}, {-16, -1}}).to_string() == "A^-4 + A^-12 - A^-16");
}

TEST_CASE("zero coefficients are dropped") {
  P p = P::from_terms({{2, 3}, {2, -3}, {0, 0}});
  CHECK(p.is_zero());
  p.add_term(5, 1);
  p.add_term(5, -1);
  CHECK(p.terms().empty());
}

TEST_CASE("loop value squared and powers") {
  const P d = P::loop_value();
  CHECK(d * d == P::from_terms({{4, 1}, {0, 2}, {-4, 1}}));
  CHECK(d.pow(0) == P(1));
  CHECK(d.pow(3) == d * d * d);
  CHECK(P::monomial(-1, 3).pow(2) == P::monomial(1, 6));
  CHECK(d.reflected() == d);
  CHECK(P::monomial(2, 3).reflected() == P::monomial(2, -3));
}

TEST_CASE("overflow is detected") {
  const P big(std::numeric_limits<int64_t>::max());
  CHECK_THROWS_AS(big + P(1), std::overflow_error);
  CHECK_THROWS_AS(big * P(2), std::overflow_error);
}

namespace {

P random_poly(Rng& rng) {
  P p;
  for (int k = rng.between(0, 4); k > 0; --k) p.add_term(rng.between(-6, 6), rng.between(-5, 5));
  return p;
}

}  // namespace

TEST_CASE("ring axioms") {
  Rng rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    const P a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + P() == a);
    CHECK(a * P(1) == a);
    CHECK(a - a == P());
    CHECK(-a + a == P());
    CHECK((a * b).reflected() == a.reflected() * b.reflected());
    CHECK(P::from_terms(a.descending()) == a);
  }
}
