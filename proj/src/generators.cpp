#include "vkc/generators.hpp"

#include <numeric>

#include "vkc/errors.hpp"

namespace vkc {

GaussDiagram random_gauss_diagram(Rng& rng, int chords, int circles) {
  if (chords < 0 || circles < 1) throw PreconditionError("random_gauss_diagram needs chords >= 0, circles >= 1");
  std::vector<Marker> ends;
  std::map<ChordId, Sign> signs;
  for (ChordId id = 1; id <= chords; ++id) {
    ends.push_back({id, Role::Over});
    ends.push_back({id, Role::Under});
    signs[id] = rng.coin() ? Sign::Positive : Sign::Negative;
  }
  rng.shuffle(ends);
  // cut the shuffled sequence into `circles` runs
  std::vector<int> cuts{0, static_cast<int>(ends.size())};
  for (int k = 1; k < circles; ++k) cuts.push_back(rng.between(0, static_cast<int>(ends.size())));
  std::sort(cuts.begin(), cuts.end());
  std::vector<Circle> out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    out.emplace_back(ends.begin() + cuts[k], ends.begin() + cuts[k + 1]);
  }
  return GaussDiagram(std::move(out), std::move(signs));
}

std::optional<CutSystem> random_cut_system(Rng& rng, const GaussDiagram& g, int max_points) {
  constexpr int kEnumerateBits = 16;
  constexpr int kSamples = 512;
  const CutSystemSpace space(g);
  std::optional<CutSystem> chosen;
  if (space.dimension() <= kEnumerateBits) {
    const auto options = space.enumerate(max_points);
    if (options.empty()) return std::nullopt;
    chosen = rng.pick(options);
  } else {
    for (int i = 0; i < kSamples && !chosen; ++i) {
      CutSystem c = space.sample(rng);
      if (c.total() <= max_points) chosen = std::move(c);
    }
    if (!chosen) return std::nullopt;
  }
  CutSystem cuts = std::move(*chosen);
  while (cuts.total() + 2 <= max_points && rng.coin()) {
    const int c = rng.below(g.circle_count());
    cuts.add({c, rng.below(g.gap_count(c))}, 2);
  }
  return cuts;
}

std::pair<CutSystem, std::vector<CutMove>> random_cut_moves(Rng& rng, const GaussDiagram& g, const CutSystem& start,
                                                            int count, int cap) {
  CutSystem cur = start;
  std::vector<CutMove> applied;
  for (int i = 0; i < count; ++i) {
    const auto moves = legal_moves(g, cur, cap);
    if (moves.empty()) break;
    const CutMove m = rng.pick(moves);
    cur = apply_cut_move(g, cur, m);
    applied.push_back(m);
  }
  return {std::move(cur), std::move(applied)};
}

PDDiagram braid_closure_pd(int strands, const std::vector<BraidLetter>& word) {
  if (strands < 2) throw PreconditionError("braid needs at least 2 strands");
  std::vector<int> cur(static_cast<std::size_t>(strands));
  std::iota(cur.begin(), cur.end(), 1);
  int next = strands + 1;
  PDDiagram pd;
  enum class Ref { Classical, Virtual };
  std::vector<std::pair<Ref, std::size_t>> order;
  for (const BraidLetter& b : word) {
    if (b.position < 0 || b.position + 1 >= strands) throw PreconditionError("braid letter out of range");
    const auto i = static_cast<std::size_t>(b.position);
    const int left = cur[i];
    const int right = cur[i + 1];
    const int new_left = next++;
    const int new_right = next++;
    switch (b.kind) {
      case BraidLetter::Kind::Positive:  // left strand over, moving right
        pd.classical.push_back({Sign::Positive, {right, left, new_left, new_right}});
        break;
      case BraidLetter::Kind::Negative:  // right strand over, moving left
        pd.classical.push_back({Sign::Negative, {left, right, new_right, new_left}});
        break;
      case BraidLetter::Kind::Virtual: pd.virtuals.push_back({{left, right, new_right, new_left}}); break;
    }
    cur[i] = new_left;
    cur[i + 1] = new_right;
  }
  // close: top edge at position i is the bottom edge i+1
  std::map<int, int> rename;
  for (int i = 0; i < strands; ++i) rename[cur[static_cast<std::size_t>(i)]] = i + 1;
  auto fix = [&](std::array<int, 4>& e) {
    for (int& x : e)
      if (auto it = rename.find(x); it != rename.end()) x = it->second;
  };
  for (auto& x : pd.classical) fix(x.edges);
  for (auto& v : pd.virtuals) fix(v.edges);
  return pd;
}

PDDiagram random_braid_pd(Rng& rng, int max_classical, int max_virtual) {
  const int strands = rng.between(2, 4);
  int classical = rng.between(0, max_classical);
  const int virtuals = rng.between(0, max_virtual);
  if (classical + virtuals == 0) classical = 1;
  std::vector<BraidLetter> word;
  for (int k = 0; k < classical; ++k) {
    word.push_back({rng.coin() ? BraidLetter::Kind::Positive : BraidLetter::Kind::Negative, rng.below(strands - 1)});
  }
  for (int k = 0; k < virtuals; ++k) word.push_back({BraidLetter::Kind::Virtual, rng.below(strands - 1)});
  rng.shuffle(word);
  return braid_closure_pd(strands, word);
}

GaussDiagram random_classical_knot(Rng& rng, int max_crossings) {
  if (max_crossings < 1) throw PreconditionError("random_classical_knot needs max_crossings >= 1");
  while (true) {
    const int strands = rng.between(2, std::min(4, max_crossings + 1));
    const int crossings = rng.between(strands - 1, std::max(strands - 1, max_crossings));
    std::vector<BraidLetter> word;
    for (int k = 0; k < crossings; ++k) {
      word.push_back({rng.coin() ? BraidLetter::Kind::Positive : BraidLetter::Kind::Negative, rng.below(strands - 1)});
    }
    const GaussDiagram g = pd_to_gauss(braid_closure_pd(strands, word));
    // untouched strands drop out of the PD; keep only genuine one-component closures
    if (g.is_knot() && g.chord_count() == crossings) {
      bool all_positions_used = true;
      for (int p = 0; p + 1 < strands; ++p) {
        all_positions_used = all_positions_used &&
                             std::any_of(word.begin(), word.end(), [&](const BraidLetter& b) { return b.position == p; });
      }
      if (all_positions_used) return g;
    }
  }
}

}  // namespace vkc
