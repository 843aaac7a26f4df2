#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vkc/cut_system.hpp"
#include "vkc/errors.hpp"
#include "vkc/generators.hpp"
#include "vkc/invariants.hpp"
#include "vkc/involutions.hpp"
#include "vkc/moves.hpp"

using namespace vkc;
using P = LaurentPolynomial;

TEST_CASE("odd chords and odd writhe") {
  CHECK(odd_chords(fixture::code(fixture::kink)).empty());
  CHECK(odd_chords(fixture::code(fixture::virtual_trefoil)) == std::set<ChordId>{1, 2});
  CHECK(odd_chords(fixture::code(fixture::trefoil)).empty());
  CHECK(odd_writhe(fixture::code(fixture::virtual_trefoil)) == 2);
  CHECK(odd_writhe(fixture::code(fixture::trefoil)) == 0);
  CHECK(odd_writhe(switch_all(fixture::code(fixture::virtual_trefoil))) == -2);
  CHECK(odd_writhe(mirror(fixture::code(fixture::virtual_trefoil))) == -2);
  CHECK_THROWS_AS(odd_writhe(fixture::code("O1+U2+|U1+O2+")), PreconditionError);
}

TEST_CASE("writhe") {
  CHECK(writhe(fixture::code(fixture::kink)) == 1);
  CHECK(writhe(fixture::code(fixture::trefoil)) == 3);
  CHECK(writhe(switch_all(fixture::code(fixture::trefoil))) == -3);
}

TEST_CASE("bracket examples") {
  CHECK(kauffman_bracket(GaussDiagram::unknot()) == P(1));
  CHECK(kauffman_bracket(fixture::code(fixture::kink)) == P::monomial(-1, 3));
  CHECK(kauffman_bracket(fixture::code("()|()")) == P::loop_value());
  CHECK(f_polynomial(fixture::code(fixture::kink)) == P(1));
  CHECK(f_polynomial(fixture::code("O1-U1-")) == P(1));
  CHECK(f_polynomial(fixture::code("U1+O1+")) == P(1));
}

TEST_CASE("f of the trefoils") {
  CHECK(f_polynomial(fixture::code(fixture::trefoil)).to_string() == "A^-4 + A^-12 - A^-16");
  CHECK(f_polynomial(mirror(fixture::code(fixture::trefoil))).to_string() == "-A^16 + A^12 + A^4");
  CHECK(f_polynomial(fixture::code(fixture::virtual_trefoil)).to_string() == "A^-4 + A^-6 - A^-10");
  // Hopf link
  CHECK(f_polynomial(fixture::code("O1+U2+|U1+O2+")).to_string() == "-A^-2 - A^-10");
}

TEST_CASE("K-flypes of the virtual trefoil keep f") {
  const GaussDiagram v = fixture::code(fixture::virtual_trefoil);
  for (ChordId c : {1, 2}) CHECK(f_polynomial(k_flype(v, c)) == f_polynomial(v));
}

TEST_CASE("bracket agrees with the loop-tracing oracle") {
  Rng rng(73);
  for (int trial = 0; trial < 500; ++trial) {
    const GaussDiagram g = random_gauss_diagram(rng, rng.between(0, 6), rng.between(1, 3));
    const P expected = oracle::bracket(g);
    CHECK(kauffman_bracket(g) == expected);
    CHECK(kauffman_bracket_serial(g) == expected);
  }
}

TEST_CASE("parallel and serial state sums are identical on larger diagrams") {
  Rng rng(79);
  for (int trial = 0; trial < 5; ++trial) {
    const GaussDiagram g = random_knot(rng, 14);
    CHECK(kauffman_bracket(g) == kauffman_bracket_serial(g));
  }
}

TEST_CASE("mirror reflects f") {
  Rng rng(83);
  for (int trial = 0; trial < 300; ++trial) {
    const GaussDiagram g = random_gauss_diagram(rng, rng.between(0, 6), rng.between(1, 2));
    CHECK(f_polynomial(mirror(g)) == f_polynomial(g).reflected());
  }
}

TEST_CASE("state limit") {
  Rng rng(89);
  const GaussDiagram g = random_knot(rng, 5);
  CHECK_THROWS_AS(kauffman_bracket(g, 4), StateLimitError);
  CHECK_THROWS_AS(f_polynomial(g, 4), StateLimitError);
  CHECK_NOTHROW(kauffman_bracket(g, 5));
}

TEST_CASE("classical knots have odd writhe 0") {
  Rng rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    const GaussDiagram g = random_classical_knot(rng, 8);
    CHECK(is_normal(g));
    CHECK(odd_writhe(g) == 0);
  }
}
