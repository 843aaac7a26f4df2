#include "vkc/invariants.hpp"

#include <bit>
#include <cstdint>
#include <numeric>

#include "vkc/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vkc {

namespace {

// Arc j of a circle runs from marker j to marker j+1. Each chord joins the
// arcs entering and leaving its two endpoints.
struct SmoothingData {
  int arcs = 0;
  int empty_circles = 0;
  struct Crossing {
    int in_tail, out_tail, in_head, out_head;
    bool positive;
  };
  std::vector<Crossing> crossings;
};

SmoothingData prepare(const GaussDiagram& g, int state_limit) {
  if (g.chord_count() > state_limit) {
    throw StateLimitError("state sum refused: " + std::to_string(g.chord_count()) + " chords exceeds the limit of " +
                          std::to_string(state_limit));
  }
  SmoothingData d;
  std::vector<int> offset;
  for (int c = 0; c < g.circle_count(); ++c) {
    offset.push_back(d.arcs);
    d.arcs += g.marker_count(c);
    if (g.marker_count(c) == 0) ++d.empty_circles;
  }
  auto in_arc = [&](EndpointRef e) {
    const int m = g.marker_count(e.circle);
    return offset[static_cast<std::size_t>(e.circle)] + (e.position + m - 1) % m;
  };
  auto out_arc = [&](EndpointRef e) { return offset[static_cast<std::size_t>(e.circle)] + e.position; };
  for (const Chord& ch : g.chords()) {
    d.crossings.push_back({in_arc(ch.tail), out_arc(ch.tail), in_arc(ch.head), out_arc(ch.head), ch.sign == Sign::Positive});
  }
  return d;
}

class ArcUnionFind {
 public:
  explicit ArcUnionFind(int n) : parent_(static_cast<std::size_t>(n)) {}
  void reset(int n) {
    components_ = n;
    std::iota(parent_.begin(), parent_.begin() + n, 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[static_cast<std::size_t>(a)] = b;
      --components_;
    }
  }
  int components() const { return components_; }

 private:
  std::vector<int> parent_;
  int components_ = 0;
};

// Loops of the state whose bit i set means A-smoothing at crossing i.
int count_loops(const SmoothingData& d, uint64_t state, ArcUnionFind& uf) {
  uf.reset(d.arcs);
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const auto& x = d.crossings[i];
    const bool a_smoothing = ((state >> i) & 1U) != 0;
    if (a_smoothing == x.positive) {
      uf.unite(x.in_tail, x.out_head);
      uf.unite(x.in_head, x.out_tail);
    } else {
      uf.unite(x.in_tail, x.in_head);
      uf.unite(x.out_tail, x.out_head);
    }
  }
  return uf.components() + d.empty_circles;
}

LaurentPolynomial assemble(const std::vector<int64_t>& histogram, int n, int max_loops) {
  const int stride = max_loops + 1;
  std::vector<LaurentPolynomial> loop_powers;
  loop_powers.emplace_back(1);
  for (int k = 1; k < max_loops; ++k) loop_powers.push_back(loop_powers.back() * LaurentPolynomial::loop_value());
  LaurentPolynomial result;
  for (int a = 0; a <= n; ++a) {
    for (int loops = 1; loops <= max_loops; ++loops) {
      const int64_t count = histogram[static_cast<std::size_t>(a * stride + loops)];
      if (count == 0) continue;
      result += LaurentPolynomial::monomial(count, 2 * a - n) * loop_powers[static_cast<std::size_t>(loops - 1)];
    }
  }
  return result;
}

}  // namespace

std::set<ChordId> odd_chords(const GaussDiagram& g) {
  if (!g.is_knot()) throw PreconditionError("odd chords are defined for knot diagrams");
  const int m = g.marker_count(0);
  std::set<ChordId> out;
  for (const Chord& ch : g.chords()) {
    const int inside = ((ch.head.position - ch.tail.position + m) % m) - 1;
    if (inside % 2 != 0) out.insert(ch.id);
  }
  return out;
}

int odd_writhe(const GaussDiagram& g) {
  int w = 0;
  for (ChordId id : odd_chords(g)) w += to_int(g.sign(id));
  return w;
}

int writhe(const GaussDiagram& g) {
  int w = 0;
  for (const auto& [id, s] : g.signs()) w += to_int(s);
  return w;
}

LaurentPolynomial kauffman_bracket(const GaussDiagram& g, int state_limit) {
  const SmoothingData d = prepare(g, state_limit);
  const int n = static_cast<int>(d.crossings.size());
  const int max_loops = d.arcs + d.empty_circles + 1;
  const int stride = max_loops + 1;
  const uint64_t states = uint64_t{1} << n;
  std::vector<int64_t> histogram(static_cast<std::size_t>((n + 1) * stride), 0);

#pragma omp parallel
  {
    std::vector<int64_t> local(histogram.size(), 0);
    ArcUnionFind uf(std::max(d.arcs, 1));
#pragma omp for schedule(static)
    for (int64_t s = 0; s < static_cast<int64_t>(states); ++s) {
      const auto state = static_cast<uint64_t>(s);
      const int a = std::popcount(state);
      ++local[static_cast<std::size_t>(a * stride + count_loops(d, state, uf))];
    }
#pragma omp critical
    for (std::size_t i = 0; i < local.size(); ++i) histogram[i] += local[i];
  }
  return assemble(histogram, n, max_loops);
}

LaurentPolynomial kauffman_bracket_serial(const GaussDiagram& g, int state_limit) {
  const SmoothingData d = prepare(g, state_limit);
  const int n = static_cast<int>(d.crossings.size());
  const uint64_t states = uint64_t{1} << n;
  ArcUnionFind uf(std::max(d.arcs, 1));
  const LaurentPolynomial loop = LaurentPolynomial::loop_value();
  LaurentPolynomial result;
  for (uint64_t s = 0; s < states; ++s) {
    const int a = std::popcount(s);
    const int loops = count_loops(d, s, uf);
    result += LaurentPolynomial::monomial(1, 2 * a - n) * loop.pow(static_cast<unsigned>(loops - 1));
  }
  return result;
}

LaurentPolynomial f_polynomial(const GaussDiagram& g, int state_limit) {
  const int w = writhe(g);
  // (-A^3)^(-w) = (-1)^w A^(-3w)
  const LaurentPolynomial norm = LaurentPolynomial::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  return norm * kauffman_bracket(g, state_limit);
}

}  // namespace vkc
