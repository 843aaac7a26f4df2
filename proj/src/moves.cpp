#include "vkc/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vkc/errors.hpp"
#include "vkc/rng.hpp"

namespace vkc {

namespace {

bool adjacent(const GaussDiagram& g, EndpointRef first, EndpointRef second) {
  if (first.circle != second.circle) return false;
  const int m = g.marker_count(first.circle);
  return (first.position + 1) % m == second.position;
}

void check_gap(const GaussDiagram& g, Gap gap) {
  if (gap.circle < 0 || gap.circle >= g.circle_count() || gap.index < 0 || gap.index >= g.gap_count(gap.circle)) {
    throw PreconditionError("gap (" + std::to_string(gap.circle) + "," + std::to_string(gap.index) + ") does not exist");
  }
}

void check_chord(const GaussDiagram& g, ChordId id) {
  if (!g.signs().contains(id)) throw PreconditionError("chord " + std::to_string(id) + " does not exist");
}

// Inserts each block after the marker opening its gap, in the given order.
GaussDiagram insert_blocks(const GaussDiagram& g, const std::vector<std::pair<Gap, std::vector<Marker>>>& blocks) {
  GaussDiagram out = g;
  auto& circles = out.mutable_circles();
  for (int c = 0; c < g.circle_count(); ++c) {
    const Circle& old = g.circle(c);
    Circle fresh;
    auto emit_gap = [&](int gi) {
      for (const auto& [gap, markers] : blocks)
        if (gap.circle == c && gap.index == gi) fresh.insert(fresh.end(), markers.begin(), markers.end());
    };
    if (old.empty()) {
      emit_gap(0);
    } else {
      for (int p = 0; p < static_cast<int>(old.size()); ++p) {
        fresh.push_back(old[static_cast<std::size_t>(p)]);
        emit_gap(p);
      }
    }
    circles[static_cast<std::size_t>(c)] = std::move(fresh);
  }
  return out;
}

GaussDiagram erase_chords(const GaussDiagram& g, const std::set<ChordId>& ids) {
  GaussDiagram out = g;
  for (auto& circle : out.mutable_circles()) {
    std::erase_if(circle, [&](const Marker& m) { return ids.contains(m.chord); });
  }
  for (ChordId id : ids) out.mutable_signs().erase(id);
  return out;
}

std::string pattern_key(const GaussDiagram& g, const std::array<std::array<EndpointRef, 2>, 3>& segs) {
  std::map<EndpointRef, int> segment_of;
  for (int k = 0; k < 3; ++k)
    for (const EndpointRef& e : segs[static_cast<std::size_t>(k)]) segment_of[e] = k;
  struct Tok {
    int other;
    char role;
    char sign;
  };
  std::array<std::array<Tok, 2>, 3> toks{};
  for (int k = 0; k < 3; ++k) {
    for (int i = 0; i < 2; ++i) {
      const EndpointRef e = segs[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
      const Marker& mk = g.at(e);
      const Chord ch = g.chord(mk.chord);
      const EndpointRef other = mk.role == Role::Over ? ch.head : ch.tail;
      toks[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = {segment_of.at(other), to_char(mk.role),
                                                                         to_char(ch.sign)};
    }
  }
  std::string best;
  std::array<int, 3> perm{0, 1, 2};
  do {
    std::array<std::string, 3> fresh;
    for (int old = 0; old < 3; ++old) {
      std::string s;
      for (const Tok& t : toks[static_cast<std::size_t>(old)]) {
        s += static_cast<char>('0' + perm[static_cast<std::size_t>(t.other)]);
        s += t.role;
        s += t.sign;
      }
      fresh[static_cast<std::size_t>(perm[static_cast<std::size_t>(old)])] = std::move(s);
    }
    std::string key = fresh[0] + "|" + fresh[1] + "|" + fresh[2];
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

const std::vector<std::string>& r3_pattern_table() {
  static const std::vector<std::string> table{
#include "r3_table.inc"
  };
  return table;
}

GaussDiagram r1_insert(const GaussDiagram& g, Gap gap, Sign sign, bool over_first) {
  check_gap(g, gap);
  const ChordId id = g.max_chord_id() + 1;
  std::vector<Marker> block{{id, Role::Over}, {id, Role::Under}};
  if (!over_first) std::swap(block[0], block[1]);
  GaussDiagram out = insert_blocks(g, {{gap, block}});
  out.mutable_signs()[id] = sign;
  return out;
}

bool r1_removable(const GaussDiagram& g, ChordId chord) {
  if (!g.signs().contains(chord)) return false;
  const Chord ch = g.chord(chord);
  return adjacent(g, ch.tail, ch.head) || adjacent(g, ch.head, ch.tail);
}

GaussDiagram r1_remove(const GaussDiagram& g, ChordId chord) {
  check_chord(g, chord);
  if (!r1_removable(g, chord)) throw PreconditionError("R1 remove: endpoints of chord " + std::to_string(chord) + " are not adjacent");
  return erase_chords(g, {chord});
}

GaussDiagram r2_insert(const GaussDiagram& g, Gap over_gap, Gap under_gap, R2Variant variant) {
  check_gap(g, over_gap);
  check_gap(g, under_gap);
  const ChordId a = g.max_chord_id() + 1;
  const ChordId b = a + 1;
  std::vector<Marker> tails{{a, Role::Over}, {b, Role::Over}};
  std::vector<Marker> heads{{a, Role::Under}, {b, Role::Under}};
  if (variant.antiparallel) std::swap(heads[0], heads[1]);
  GaussDiagram out = insert_blocks(g, {{over_gap, tails}, {under_gap, heads}});
  out.mutable_signs()[a] = variant.first_sign;
  out.mutable_signs()[b] = -variant.first_sign;
  return out;
}

bool r2_removable(const GaussDiagram& g, ChordId a, ChordId b) {
  if (a == b || !g.signs().contains(a) || !g.signs().contains(b)) return false;
  const Chord ca = g.chord(a);
  const Chord cb = g.chord(b);
  if (ca.sign == cb.sign) return false;
  const bool tails = adjacent(g, ca.tail, cb.tail) || adjacent(g, cb.tail, ca.tail);
  const bool heads = adjacent(g, ca.head, cb.head) || adjacent(g, cb.head, ca.head);
  return tails && heads;
}

GaussDiagram r2_remove(const GaussDiagram& g, ChordId a, ChordId b) {
  check_chord(g, a);
  check_chord(g, b);
  if (!r2_removable(g, a, b)) {
    throw PreconditionError("R2 remove: chords " + std::to_string(a) + "," + std::to_string(b) + " do not form a bigon");
  }
  return erase_chords(g, {a, b});
}

std::vector<R3Site> r3_sites(const GaussDiagram& g, std::array<ChordId, 3> chords) {
  for (ChordId id : chords) check_chord(g, id);
  if (chords[0] == chords[1] || chords[0] == chords[2] || chords[1] == chords[2]) {
    throw PreconditionError("R3 needs three distinct chords");
  }
  std::vector<EndpointRef> ends;
  for (ChordId id : chords) {
    const Chord ch = g.chord(id);
    ends.push_back(ch.tail);
    ends.push_back(ch.head);
  }
  std::vector<std::array<EndpointRef, 2>> candidates;
  for (const EndpointRef& x : ends)
    for (const EndpointRef& y : ends)
      if (adjacent(g, x, y) && g.at(x).chord != g.at(y).chord) candidates.push_back({x, y});
  std::sort(candidates.begin(), candidates.end());

  const auto& table = r3_pattern_table();
  std::vector<R3Site> sites;
  const std::size_t n = candidates.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::array<std::array<EndpointRef, 2>, 3> segs{candidates[i], candidates[j], candidates[k]};
        std::set<EndpointRef> covered;
        std::set<std::pair<ChordId, ChordId>> pairs;
        for (const auto& s : segs) {
          covered.insert(s[0]);
          covered.insert(s[1]);
          ChordId p = g.at(s[0]).chord;
          ChordId q = g.at(s[1]).chord;
          pairs.insert({std::min(p, q), std::max(p, q)});
        }
        if (covered.size() != 6 || pairs.size() != 3) continue;
        std::string key = pattern_key(g, segs);
        if (std::find(table.begin(), table.end(), key) == table.end()) continue;
        sites.push_back({chords, segs, std::move(key)});
      }
    }
  }
  return sites;
}

std::vector<R3Site> all_r3_sites(const GaussDiagram& g) {
  // chords x, y with some pair of endpoints adjacent
  std::set<std::pair<ChordId, ChordId>> touching;
  for (int c = 0; c < g.circle_count(); ++c) {
    const int m = g.marker_count(c);
    for (int p = 0; p < m; ++p) {
      ChordId x = g.circle(c)[static_cast<std::size_t>(p)].chord;
      ChordId y = g.circle(c)[static_cast<std::size_t>((p + 1) % m)].chord;
      if (x != y) touching.insert({std::min(x, y), std::max(x, y)});
    }
  }
  std::vector<ChordId> ids;
  for (const auto& [id, s] : g.signs()) ids.push_back(id);
  std::vector<R3Site> out;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (!touching.contains({ids[i], ids[j]})) continue;
      for (std::size_t k = j + 1; k < ids.size(); ++k) {
        if (!touching.contains({ids[i], ids[k]}) || !touching.contains({ids[j], ids[k]})) continue;
        auto sites = r3_sites(g, {ids[i], ids[j], ids[k]});
        out.insert(out.end(), sites.begin(), sites.end());
      }
    }
  return out;
}

GaussDiagram r3(const GaussDiagram& g, std::array<ChordId, 3> chords, int variant) {
  const auto sites = r3_sites(g, chords);
  if (variant < 0 || variant >= static_cast<int>(sites.size())) {
    throw PreconditionError("R3: chords do not match a recognized pattern (variant " + std::to_string(variant) + ")");
  }
  GaussDiagram out = g;
  auto& circles = out.mutable_circles();
  for (const auto& seg : sites[static_cast<std::size_t>(variant)].segments) {
    auto& circle = circles[static_cast<std::size_t>(seg[0].circle)];
    std::swap(circle[static_cast<std::size_t>(seg[0].position)], circle[static_cast<std::size_t>(seg[1].position)]);
  }
  return out;
}

GaussDiagram k_flype(const GaussDiagram& g, ChordId chord) {
  check_chord(g, chord);
  GaussDiagram out = g;
  for (auto& circle : out.mutable_circles())
    for (auto& m : circle)
      if (m.chord == chord) m.role = opposite(m.role);
  return out;
}

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1Insert: return "r1_insert";
    case MoveKind::R1Remove: return "r1_remove";
    case MoveKind::R2Insert: return "r2_insert";
    case MoveKind::R2Remove: return "r2_remove";
    case MoveKind::R3: return "r3";
    case MoveKind::KFlype: return "k_flype";
  }
  return "?";
}

GaussDiagram apply_move(const GaussDiagram& g, Move& move) {
  move.created.clear();
  switch (move.kind) {
    case MoveKind::R1Insert:
      move.created = {g.max_chord_id() + 1};
      return r1_insert(g, move.gap, move.sign, move.over_first);
    case MoveKind::R1Remove: return r1_remove(g, move.chords[0]);
    case MoveKind::R2Insert:
      move.created = {g.max_chord_id() + 1, g.max_chord_id() + 2};
      return r2_insert(g, move.gap, move.gap2, {move.antiparallel, move.sign});
    case MoveKind::R2Remove: return r2_remove(g, move.chords[0], move.chords[1]);
    case MoveKind::R3: return r3(g, move.chords, move.variant);
    case MoveKind::KFlype: return k_flype(g, move.chords[0]);
  }
  throw PreconditionError("unknown move kind");
}

GaussDiagram apply_move(const GaussDiagram& g, const Move& move) {
  Move copy = move;
  GaussDiagram out = apply_move(g, copy);
  if (copy.created != move.created) throw PreconditionError("replayed move created different chord ids");
  return out;
}

GaussDiagram replay(const GaussDiagram& start, const MoveTrace& trace) {
  GaussDiagram g = start;
  for (const Move& m : trace.steps) g = apply_move(g, m);
  return g;
}

namespace {

Gap random_gap(const GaussDiagram& g, Rng& rng) {
  const int c = rng.below(g.circle_count());
  return {c, rng.below(g.gap_count(c))};
}

Move draw_r1(const GaussDiagram& g, Rng& rng) {
  std::vector<ChordId> removable;
  for (const auto& [id, s] : g.signs())
    if (r1_removable(g, id)) removable.push_back(id);
  Move m;
  if (!removable.empty() && rng.coin()) {
    m.kind = MoveKind::R1Remove;
    m.chords[0] = rng.pick(removable);
    return m;
  }
  m.kind = MoveKind::R1Insert;
  m.gap = random_gap(g, rng);
  m.sign = rng.coin() ? Sign::Positive : Sign::Negative;
  m.over_first = rng.coin();
  return m;
}

Move draw_r2(const GaussDiagram& g, Rng& rng) {
  std::vector<std::pair<ChordId, ChordId>> removable;
  for (const auto& [a, sa] : g.signs())
    for (const auto& [b, sb] : g.signs())
      if (a < b && r2_removable(g, a, b)) removable.push_back({a, b});
  Move m;
  if (!removable.empty() && rng.coin()) {
    m.kind = MoveKind::R2Remove;
    const auto [a, b] = rng.pick(removable);
    m.chords[0] = a;
    m.chords[1] = b;
    return m;
  }
  m.kind = MoveKind::R2Insert;
  m.gap = random_gap(g, rng);
  m.gap2 = random_gap(g, rng);
  m.antiparallel = rng.coin();
  m.sign = rng.coin() ? Sign::Positive : Sign::Negative;
  return m;
}

}  // namespace

std::pair<GaussDiagram, MoveTrace> random_walk(const GaussDiagram& g, int steps, uint64_t seed, bool allow_flype) {
  if (steps < 0) throw PreconditionError("random_walk needs steps >= 0");
  Rng rng(seed);
  MoveTrace trace;
  trace.seed = seed;
  GaussDiagram cur = g;
  for (int step = 0; step < steps; ++step) {
    const int roll = rng.below(allow_flype ? 100 : 90);
    Move m;
    if (roll < 40) {
      m = draw_r1(cur, rng);
    } else if (roll < 80) {
      m = draw_r2(cur, rng);
    } else if (roll < 90) {
      const auto sites = all_r3_sites(cur);
      if (sites.empty()) {
        m = rng.coin() ? draw_r1(cur, rng) : draw_r2(cur, rng);
      } else {
        const R3Site& site = rng.pick(sites);
        m.kind = MoveKind::R3;
        m.chords = site.chords;
        const auto same = r3_sites(cur, site.chords);
        m.variant = static_cast<int>(std::find_if(same.begin(), same.end(), [&](const R3Site& s) {
                                       return s.segments == site.segments;
                                     }) - same.begin());
      }
    } else if (cur.chord_count() == 0) {
      m = draw_r1(cur, rng);
    } else {
      std::vector<ChordId> ids;
      for (const auto& [id, s] : cur.signs()) ids.push_back(id);
      m.kind = MoveKind::KFlype;
      m.chords[0] = rng.pick(ids);
    }
    cur = apply_move(cur, m);
    trace.steps.push_back(std::move(m));
  }
  return {std::move(cur), std::move(trace)};
}

}  // namespace vkc
