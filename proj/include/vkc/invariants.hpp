#pragma once

#include <set>

#include "vkc/gauss_diagram.hpp"
#include "vkc/laurent.hpp"

namespace vkc {

inline constexpr int kDefaultStateLimit = 20;

/// Chords with an odd number of endpoints strictly inside the tail-to-head
/// arc. Knots only.
std::set<ChordId> odd_chords(const GaussDiagram& g);
int odd_writhe(const GaussDiagram& g);
int writhe(const GaussDiagram& g);

/// State sum over all 2^n smoothings: A^(a-b) d^(loops-1) with
/// d = -A^2 - A^-2. The A-smoothing of a positive chord (B-smoothing of a
/// negative one) follows the circle orientation. Evaluated in parallel with
/// OpenMP; the result is exact and independent of the thread count.
/// Throws StateLimitError if the diagram has more than `state_limit` chords.
LaurentPolynomial kauffman_bracket(const GaussDiagram& g, int state_limit = kDefaultStateLimit);

/// Single-threaded reference evaluation of the same state sum, accumulating
/// one polynomial term per state.
LaurentPolynomial kauffman_bracket_serial(const GaussDiagram& g, int state_limit = kDefaultStateLimit);

/// (-A^3)^(-writhe) <G>.
LaurentPolynomial f_polynomial(const GaussDiagram& g, int state_limit = kDefaultStateLimit);

}  // namespace vkc
