#include "vkc/cut_system.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "vkc/errors.hpp"

namespace vkc {

namespace {

/// Union-find carrying the parity of each element relative to its root.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(static_cast<std::size_t>(n)), parity_(static_cast<std::size_t>(n), 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::pair<int, int> find(int x) {
    int p = 0;
    int r = x;
    while (parent_[static_cast<std::size_t>(r)] != r) {
      p ^= parity_[static_cast<std::size_t>(r)];
      r = parent_[static_cast<std::size_t>(r)];
    }
    // path compression with parity fix-up
    int acc = p;
    while (parent_[static_cast<std::size_t>(x)] != x) {
      const int next = parent_[static_cast<std::size_t>(x)];
      const int px = parity_[static_cast<std::size_t>(x)];
      parent_[static_cast<std::size_t>(x)] = r;
      parity_[static_cast<std::size_t>(x)] = acc;
      acc ^= px;
      x = next;
    }
    return {r, p};
  }

  /// Requires parity(a) ^ parity(b) == rel; false on contradiction.
  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent_[static_cast<std::size_t>(rb)] = ra;
    parity_[static_cast<std::size_t>(rb)] = pa ^ pb ^ rel;
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> parity_;
};

int item_index_of(const CutSystem& cuts, int circle, int position) {
  int k = position;
  for (int h = 0; h < position; ++h) k += cuts.count({circle, h});
  return k;
}

int wrap(int x, int m) { return ((x % m) + m) % m; }

// ---- GF(2) linear algebra for cut-system search -------------------------

using Bits = std::vector<uint64_t>;

bool get_bit(const Bits& b, int i) { return (b[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1U; }
void flip_bit(Bits& b, int i) { b[static_cast<std::size_t>(i) / 64] ^= uint64_t{1} << (i % 64); }
void xor_into(Bits& dst, const Bits& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] ^= src[w];
}

int popcount(const Bits& b) {
  int n = 0;
  for (uint64_t w : b) n += std::popcount(w);
  return n;
}

bool counts_less(const CutSystem& a, const CutSystem& b) {
  const int ta = a.total();
  const int tb = b.total();
  if (ta != tb) return ta < tb;
  return a.counts() < b.counts();
}

std::string state_key(const CutSystem& cuts) {
  std::string key;
  for (const auto& row : cuts.counts()) {
    for (int n : row) key.push_back(static_cast<char>(n));
    key.push_back('\xff');
  }
  return key;
}

}  // namespace

// Columns: one base bit per circle, then one bit per gap. Rows: per-circle
// marker parity and, per chord, opposite sink/source types at its ends.
CutSystemSpace::CutSystemSpace(const GaussDiagram& g) : shape_(g) {
  const int circles = g.circle_count();
  std::vector<int> offset(static_cast<std::size_t>(circles) + 1, 0);
  for (int c = 0; c < circles; ++c) {
    offset[static_cast<std::size_t>(c) + 1] = offset[static_cast<std::size_t>(c)] + g.gap_count(c);
    for (int h = 0; h < g.gap_count(c); ++h) gaps_.push_back({c, h});
  }
  const int nx = offset.back();
  const int cols = circles + nx;  // base columns first
  const std::size_t words = static_cast<std::size_t>(cols + 1 + 63) / 64;  // last column = rhs
  const int rhs_col = cols;

  std::vector<Bits> rows;
  for (int c = 0; c < circles; ++c) {
    Bits r(words, 0);
    for (int h = 0; h < g.gap_count(c); ++h) flip_bit(r, circles + offset[static_cast<std::size_t>(c)] + h);
    if (g.marker_count(c) % 2 != 0) flip_bit(r, rhs_col);
    rows.push_back(std::move(r));
  }
  for (const Chord& ch : g.chords()) {
    Bits r(words, 0);
    flip_bit(r, ch.tail.circle);
    flip_bit(r, ch.head.circle);
    for (int h = 0; h < ch.tail.position; ++h) flip_bit(r, circles + offset[static_cast<std::size_t>(ch.tail.circle)] + h);
    for (int h = 0; h < ch.head.position; ++h) flip_bit(r, circles + offset[static_cast<std::size_t>(ch.head.circle)] + h);
    if ((1 + ch.tail.position + ch.head.position) % 2 != 0) flip_bit(r, rhs_col);
    rows.push_back(std::move(r));
  }

  // Reduced row echelon form.
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && !get_bit(rows[sel], col)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != rank && get_bit(rows[i], col)) xor_into(rows[i], rows[rank]);
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows.size(); ++i) {
    if (get_bit(rows[i], rhs_col)) throw InternalError("parity constraints are inconsistent; no cut system exists");
  }

  const std::size_t xwords = static_cast<std::size_t>(nx + 63) / 64;
  particular_.assign(xwords, 0);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (std::size_t i = 0; i < rank; ++i) {
    const int pc = pivot_col[i];
    is_pivot[static_cast<std::size_t>(pc)] = true;
    if (pc >= circles && get_bit(rows[i], rhs_col)) flip_bit(particular_, pc - circles);
  }
  for (int v = 0; v < nx; ++v) {
    const int col = circles + v;
    if (is_pivot[static_cast<std::size_t>(col)]) continue;
    Bits effect(xwords, 0);
    flip_bit(effect, v);
    for (std::size_t i = 0; i < rank; ++i) {
      const int pc = pivot_col[i];
      if (pc >= circles && get_bit(rows[i], col)) flip_bit(effect, pc - circles);
    }
    free_effect_.push_back(std::move(effect));
  }
}


CutSystem CutSystemSpace::materialize(const Bits& x) const {
  CutSystem cuts(shape_);
  for (std::size_t v = 0; v < gaps_.size(); ++v)
    if (get_bit(x, static_cast<int>(v))) cuts.set(gaps_[v], 1);
  return cuts;
}

CutSystem CutSystemSpace::sample(Rng& rng) const {
  Bits x = particular_;
  for (const Bits& e : free_effect_)
    if (rng.coin()) xor_into(x, e);
  return materialize(x);
}

std::vector<CutSystem> CutSystemSpace::enumerate(int max_total) const {
  std::vector<CutSystem> out;
  Bits x = particular_;
  const uint64_t count = uint64_t{1} << dimension();
  for (uint64_t i = 0; i < count; ++i) {
    if (i > 0) xor_into(x, free_effect_[static_cast<std::size_t>(std::countr_zero(i))]);
    if (popcount(x) <= max_total) out.push_back(materialize(x));
  }
  std::sort(out.begin(), out.end(), counts_less);
  return out;
}

AlternateOrientation::AlternateOrientation(std::vector<bool> base_forward, CutSystem cuts, const GaussDiagram& g)
    : base_(std::move(base_forward)), cuts_(std::move(cuts)) {
  for (int c = 0; c < g.circle_count(); ++c) marker_counts_.push_back(g.marker_count(c));
}

int AlternateOrientation::item_index(EndpointRef e) const { return item_index_of(cuts_, e.circle, e.position); }

bool AlternateOrientation::forward(Gap gap, int sub_arc) const {
  const int m = marker_counts_.at(static_cast<std::size_t>(gap.circle));
  const int items = m + cuts_.circle_total(gap.circle);
  int arc;
  if (m == 0) {
    arc = items == 0 ? 0 : wrap(sub_arc - 1, items);
  } else {
    arc = wrap(item_index_of(cuts_, gap.circle, gap.index) + sub_arc, items);
  }
  return base_[static_cast<std::size_t>(gap.circle)] != (arc % 2 != 0);
}

bool AlternateOrientation::is_sink(EndpointRef e) const {
  // The arc entering item k is arc k-1; it points forward into k.
  const int k = item_index(e);
  return base_[static_cast<std::size_t>(e.circle)] != (k % 2 == 0);
}

std::optional<AlternateOrientation> alternate_orientation(const GaussDiagram& g, const CutSystem& cuts) {
  if (!cuts.fits(g)) throw PreconditionError("cut system does not fit the diagram");
  const int n = g.circle_count();
  for (int c = 0; c < n; ++c) {
    if ((g.marker_count(c) + cuts.circle_total(c)) % 2 != 0) return std::nullopt;
  }
  ParityUnionFind uf(n);
  for (const Chord& ch : g.chords()) {
    const int kt = item_index_of(cuts, ch.tail.circle, ch.tail.position);
    const int kh = item_index_of(cuts, ch.head.circle, ch.head.position);
    const int rel = 1 ^ ((kt + kh) & 1);
    if (ch.tail.circle == ch.head.circle) {
      if (rel != 0) return std::nullopt;
      continue;
    }
    if (!uf.unite(ch.tail.circle, ch.head.circle, rel)) return std::nullopt;
  }
  // Lowest-indexed circle of each component is forward.
  std::vector<int> root_base(static_cast<std::size_t>(n), -1);
  std::vector<bool> base(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    auto [r, p] = uf.find(c);
    if (root_base[static_cast<std::size_t>(r)] < 0) root_base[static_cast<std::size_t>(r)] = 1 ^ p;
    base[static_cast<std::size_t>(c)] = (root_base[static_cast<std::size_t>(r)] ^ p) != 0;
  }
  return AlternateOrientation(std::move(base), cuts, g);
}

bool is_cut_system(const GaussDiagram& g, const CutSystem& cuts) { return alternate_orientation(g, cuts).has_value(); }

bool is_normal(const GaussDiagram& g) { return is_cut_system(g, CutSystem(g)); }

bool satisfies_parity_condition(const GaussDiagram& g, const CutSystem& cuts) {
  if (!g.is_knot()) throw PreconditionError("parity condition applies to knot diagrams only");
  if (!cuts.fits(g)) throw PreconditionError("cut system does not fit the diagram");
  const int m = g.marker_count(0);
  if ((m + cuts.total()) % 2 != 0) return false;
  for (const Chord& ch : g.chords()) {
    // walk forward from the tail to the head
    int inside = 0;
    int p = ch.tail.position;
    while (true) {
      inside += cuts.count({0, p});
      p = (p + 1) % m;
      if (p == ch.head.position) break;
      ++inside;
    }
    if (inside % 2 != 0) return false;
  }
  return true;
}

std::pair<GaussDiagram, CutSystem> canonical_cut_system(const PDDiagram& pd) {
  PDTrace trace = trace_pd(pd);
  CutSystem cuts(trace.diagram);
  for (const PDVirtual& v : pd.virtuals) {
    cuts.add(trace.edge_gap.at(v.edges[2]), 1);
    cuts.add(trace.edge_gap.at(v.edges[3]), 1);
  }
  if (!is_cut_system(trace.diagram, cuts)) {
    throw InternalError("canonical cut system rejected by the alternate-orientation checker");
  }
  return {std::move(trace.diagram), std::move(cuts)};
}

std::vector<CutSystem> small_cut_systems(const GaussDiagram& g, int max_total, int max_free_bits) {
  const CutSystemSpace space(g);
  if (space.dimension() > max_free_bits) return {};
  return space.enumerate(max_total);
}

CutSystem find_cut_system(const GaussDiagram& g) {
  constexpr int kMaxFreeBits = 22;
  const CutSystemSpace space(g);
  if (space.dimension() > kMaxFreeBits) return space.particular();
  return space.enumerate(std::numeric_limits<int>::max()).front();
}

const char* to_string(CutMoveKind k) {
  switch (k) {
    case CutMoveKind::IInsert: return "I_insert";
    case CutMoveKind::IDelete: return "I_delete";
    case CutMoveKind::IIIInsert: return "III_insert";
    case CutMoveKind::IIIDelete: return "III_delete";
  }
  return "?";
}

CutMove CutMove::inverse() const {
  switch (kind) {
    case CutMoveKind::IInsert: return i_delete(gap);
    case CutMoveKind::IDelete: return i_insert(gap);
    case CutMoveKind::IIIInsert: return iii_delete(chord);
    case CutMoveKind::IIIDelete: return iii_insert(chord);
  }
  return *this;
}

std::vector<Gap> flanking_gaps(const GaussDiagram& g, ChordId chord) {
  const Chord ch = g.chord(chord);
  std::vector<Gap> out;
  for (EndpointRef e : {ch.tail, ch.head}) {
    const int m = g.marker_count(e.circle);
    out.push_back({e.circle, wrap(e.position - 1, m)});
    out.push_back({e.circle, e.position});
  }
  return out;
}

bool is_legal(const GaussDiagram& g, const CutSystem& cuts, const CutMove& m) {
  switch (m.kind) {
    case CutMoveKind::IInsert:
      return m.gap.circle >= 0 && m.gap.circle < g.circle_count() && m.gap.index >= 0 &&
             m.gap.index < g.gap_count(m.gap.circle);
    case CutMoveKind::IDelete:
      return is_legal(g, cuts, CutMove::i_insert(m.gap)) && cuts.count(m.gap) >= 2;
    case CutMoveKind::IIIInsert: return g.signs().contains(m.chord);
    case CutMoveKind::IIIDelete: {
      if (!g.signs().contains(m.chord)) return false;
      CutSystem probe = cuts;
      for (Gap gap : flanking_gaps(g, m.chord)) {
        probe.add(gap, -1);
        if (probe.count(gap) < 0) return false;
      }
      return true;
    }
  }
  return false;
}

CutSystem apply_cut_move(const GaussDiagram& g, const CutSystem& cuts, const CutMove& m) {
  if (!cuts.fits(g)) throw PreconditionError("cut system does not fit the diagram");
  if (!is_legal(g, cuts, m)) throw PreconditionError(std::string("illegal cut move ") + to_string(m.kind));
  CutSystem out = cuts;
  switch (m.kind) {
    case CutMoveKind::IInsert: out.add(m.gap, 2); break;
    case CutMoveKind::IDelete: out.add(m.gap, -2); break;
    case CutMoveKind::IIIInsert:
      for (Gap gap : flanking_gaps(g, m.chord)) out.add(gap, 1);
      break;
    case CutMoveKind::IIIDelete:
      for (Gap gap : flanking_gaps(g, m.chord)) out.add(gap, -1);
      break;
  }
  return out;
}

CutSystem apply_cut_moves(const GaussDiagram& g, const CutSystem& cuts, const std::vector<CutMove>& moves) {
  CutSystem out = cuts;
  for (const CutMove& m : moves) out = apply_cut_move(g, out, m);
  return out;
}

std::vector<CutMove> legal_moves(const GaussDiagram& g, const CutSystem& cuts, int cap) {
  std::vector<CutMove> moves;
  for (int c = 0; c < g.circle_count(); ++c)
    for (int h = 0; h < g.gap_count(c); ++h)
      if (cuts.count({c, h}) + 2 <= cap) moves.push_back(CutMove::i_insert({c, h}));
  for (int c = 0; c < g.circle_count(); ++c)
    for (int h = 0; h < g.gap_count(c); ++h)
      if (cuts.count({c, h}) >= 2) moves.push_back(CutMove::i_delete({c, h}));
  std::vector<std::pair<ChordId, std::vector<Gap>>> flanks;
  for (const auto& [id, s] : g.signs()) flanks.push_back({id, flanking_gaps(g, id)});
  for (const auto& [id, gaps] : flanks) {
    CutSystem probe = cuts;
    bool ok = true;
    for (Gap gap : gaps) {
      probe.add(gap, 1);
      ok = ok && probe.count(gap) <= cap;
    }
    if (ok) moves.push_back(CutMove::iii_insert(id));
  }
  for (const auto& [id, gaps] : flanks) {
    CutSystem probe = cuts;
    bool ok = true;
    for (Gap gap : gaps) {
      probe.add(gap, -1);
      ok = ok && probe.count(gap) >= 0;
    }
    if (ok) moves.push_back(CutMove::iii_delete(id));
  }
  return moves;
}

std::vector<CutSystem> neighbors(const GaussDiagram& g, const CutSystem& cuts, int cap) {
  if (!cuts.fits(g)) throw PreconditionError("cut system does not fit the diagram");
  if (cap < cuts.max_count()) throw PreconditionError("cap is below the largest count in the cut system");
  std::vector<CutSystem> out;
  for (const CutMove& m : legal_moves(g, cuts, cap)) {
    CutSystem next = apply_cut_move(g, cuts, m);
    if (std::find(out.begin(), out.end(), next) == out.end()) out.push_back(std::move(next));
  }
  return out;
}

namespace {

struct Layered {
  struct Entry {
    int depth;
    std::size_t order;  // discovery index
    std::string parent;
    CutMove move;
  };
  std::unordered_map<std::string, Entry> seen;
  std::vector<CutSystem> frontier;
  std::size_t discovered = 0;
};

// Expands one breadth-first layer, moves tried in (kind, location) order.
void expand(const GaussDiagram& g, Layered& side, int cap) {
  std::vector<CutSystem> next;
  for (const CutSystem& state : side.frontier) {
    const std::string key = state_key(state);
    const int depth = side.seen.at(key).depth;
    for (const CutMove& m : legal_moves(g, state, cap)) {
      CutSystem n = apply_cut_move(g, state, m);
      auto [it, inserted] = side.seen.try_emplace(state_key(n), Layered::Entry{depth + 1, side.discovered, key, m});
      if (!inserted) continue;
      ++side.discovered;
      next.push_back(std::move(n));
    }
  }
  side.frontier = std::move(next);
}

}  // namespace

std::optional<std::vector<CutMove>> find_move_path(const GaussDiagram& g, const CutSystem& from, const CutSystem& to,
                                                   int max_depth, int cap) {
  if (!is_cut_system(g, from) || !is_cut_system(g, to)) {
    throw PreconditionError("find_move_path requires two cut systems");
  }
  if (cap < from.max_count() || cap < to.max_count()) throw PreconditionError("cap is below a count in the endpoints");
  if (from == to) return std::vector<CutMove>{};
  if (max_depth <= 0) return std::nullopt;

  // Meet in the middle: the neighbor relation is symmetric, so the search
  // from `to` yields exact distances to the goal for the greedy suffix.
  Layered fwd;
  Layered bwd;
  const std::string start = state_key(from);
  const std::string goal = state_key(to);
  fwd.seen.emplace(start, Layered::Entry{0, fwd.discovered++, {}, {}});
  fwd.frontier = {from};
  bwd.seen.emplace(goal, Layered::Entry{0, bwd.discovered++, {}, {}});
  bwd.frontier = {to};
  const int fwd_depth = (max_depth + 1) / 2;
  const int bwd_depth = max_depth / 2;
  for (int d = 0; d < fwd_depth; ++d) expand(g, fwd, cap);
  for (int d = 0; d < bwd_depth; ++d) expand(g, bwd, cap);

  int best = max_depth + 1;
  for (const auto& [key, e] : fwd.seen) {
    auto it = bwd.seen.find(key);
    if (it != bwd.seen.end()) best = std::min(best, e.depth + it->second.depth);
  }
  if (best > max_depth) return std::nullopt;

  // Lexicographically first prefix: earliest-discovered middle state.
  const int half = (best + 1) / 2;
  const std::string* middle = nullptr;
  std::size_t middle_order = SIZE_MAX;
  for (const auto& [key, e] : fwd.seen) {
    if (e.depth != half) continue;
    auto it = bwd.seen.find(key);
    if (it == bwd.seen.end() || it->second.depth != best - half) continue;
    if (e.order < middle_order) {
      middle_order = e.order;
      middle = &key;
    }
  }
  std::vector<CutMove> path;
  for (std::string cur = *middle; cur != start;) {
    const auto& e = fwd.seen.at(cur);
    path.push_back(e.move);
    cur = e.parent;
  }
  std::reverse(path.begin(), path.end());

  // Greedy suffix: first move that stays on a shortest route to the goal.
  CutSystem cur = apply_cut_moves(g, from, path);
  for (int remaining = best - half; remaining > 0; --remaining) {
    bool advanced = false;
    for (const CutMove& m : legal_moves(g, cur, cap)) {
      CutSystem n = apply_cut_move(g, cur, m);
      auto it = bwd.seen.find(state_key(n));
      if (it != bwd.seen.end() && it->second.depth == remaining - 1) {
        path.push_back(m);
        cur = std::move(n);
        advanced = true;
        break;
      }
    }
    if (!advanced) throw InternalError("bidirectional search lost the shortest path");
  }
  return path;
}

}  // namespace vkc
