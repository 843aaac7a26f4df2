#include "vkc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>

#include "vkc/cut_system.hpp"
#include "vkc/double_cover.hpp"
#include "vkc/errors.hpp"
#include "vkc/gauss_code.hpp"
#include "vkc/generators.hpp"
#include "vkc/invariants.hpp"
#include "vkc/involutions.hpp"
#include "vkc/moves.hpp"
#include "vkc/pd.hpp"
#include "vkc/rng.hpp"

namespace vkc {

namespace {

struct Trial {
  Json failure;  // null when the trial passed
  std::map<std::string, int64_t> counters;

  void fail(Json why) {
    if (failure.is_null()) failure = std::move(why);
  }
  void count(const std::string& key, int64_t n = 1) { counters[key] += n; }
};

using TrialFn = std::function<void(Trial&, Rng&, uint64_t, const SuiteOptions&)>;

constexpr int kRedraws = 256;

Json diagram_json(const GaussDiagram& g, const CutSystem& cuts) {
  return Json{{"code", to_gauss_code(g)}, {"cuts", cuts_to_json(cuts)}};
}

// Cover checks shared by every suite that builds covers: normality always;
// for knots, two components whose arcs alternate between the sheets.
CoverResult checked_cover(Trial& t, const GaussDiagram& g, const CutSystem& cuts) {
  CoverResult cover = double_cover(g, cuts);
  t.count("coversChecked");
  Json why = diagram_json(g, cuts);
  why["cover"] = to_gauss_code(cover.diagram);
  if (!is_normal(cover.diagram)) {
    why["check"] = "cover is not normal";
    t.fail(why);
    return cover;
  }
  t.count("coversNormal");
  if (g.is_knot()) {
    if (component_count(cover) != 2) {
      why["check"] = "knot cover does not have 2 components";
      t.fail(why);
    } else if (cuts.total() > 0) {
      for (std::size_t k = 1; k < cover.arcs.size(); ++k) {
        const ArcLabel& prev = cover.arcs[k - 1];
        const ArcLabel& cur = cover.arcs[k];
        if (prev.cover_circle == cur.cover_circle && prev.sheet == cur.sheet) {
          why["check"] = "cover arcs do not alternate sheets";
          t.fail(why);
          break;
        }
      }
    }
  }
  return cover;
}

GaussDiagram disjoint_union(const GaussDiagram& a, const GaussDiagram& b) {
  const ChordId shift = a.max_chord_id();
  std::vector<Circle> circles = a.circles();
  std::map<ChordId, Sign> signs = a.signs();
  for (Circle c : b.circles()) {
    for (Marker& m : c) m.chord += shift;
    circles.push_back(std::move(c));
  }
  for (const auto& [id, s] : b.signs()) signs[id + shift] = s;
  return GaussDiagram(std::move(circles), std::move(signs));
}

struct KnotWithCuts {
  GaussDiagram g;
  CutSystem cuts;
};

KnotWithCuts draw_knot_with_cuts(Rng& rng, int max_chords, int max_points) {
  for (int i = 0; i < kRedraws; ++i) {
    GaussDiagram g = random_knot(rng, rng.between(0, max_chords));
    if (auto cuts = random_cut_system(rng, g, max_points)) return {std::move(g), std::move(*cuts)};
  }
  throw InternalError("no knot with a small cut system after repeated draws");
}

// A uniformly chosen 0/1 cut system plus up to two random move-I pairs.
CutSystem loose_cut_system(Rng& rng, const GaussDiagram& g) {
  CutSystem cuts = CutSystemSpace(g).sample(rng);
  const int pairs = rng.between(0, 2);
  for (int k = 0; k < pairs; ++k) {
    const int c = rng.below(g.circle_count());
    cuts.add({c, rng.below(g.gap_count(c))}, 2);
  }
  return cuts;
}

void lkn_equals_odd_writhe(Trial& t, Rng& rng, uint64_t, const SuiteOptions& o) {
  const auto [g, cuts] = draw_knot_with_cuts(rng, o.max_chords, o.max_cut_points);
  checked_cover(t, g, cuts);
  const int lk = lk_n(g, cuts);
  const int ow = odd_writhe(g);
  if (lk != ow) {
    Json why = diagram_json(g, cuts);
    why["lkN"] = lk;
    why["oddWrithe"] = ow;
    t.fail(why);
  }
  t.count("oddWritheNonzero", ow != 0);
}

void cover_invariance(Trial& t, Rng& rng, uint64_t seed, const SuiteOptions& o) {
  const auto [g, cuts] = draw_knot_with_cuts(rng, o.max_chords, o.max_cut_points);
  const int steps = rng.between(0, o.walk_steps);
  // Redraw walks (fresh derived seeds) until both covers fit the state sum.
  auto fits = [&](const GaussDiagram& d) { return !o.compare_f || 2 * d.chord_count() <= o.state_limit; };
  GaussDiagram walked;
  MoveTrace trace;
  bool found = false;
  for (int a = 0; a < kRedraws && !found; ++a) {
    std::tie(walked, trace) = random_walk(g, steps, Rng::derive(seed, static_cast<uint64_t>(a) + 1), true);
    found = fits(walked);
  }
  if (!found) std::tie(walked, trace) = random_walk(g, 0, Rng::derive(seed, 0), true);
  const CutSystem walked_cuts = loose_cut_system(rng, walked);

  const CoverResult c1 = checked_cover(t, g, cuts);
  const CoverResult c2 = checked_cover(t, walked, walked_cuts);
  Json why = diagram_json(g, cuts);
  why["walked"] = diagram_json(walked, walked_cuts);
  why["trace"] = to_json(trace);

  const int lk1 = lk_n(g, cuts);
  const int lk2 = lk_n(walked, walked_cuts);
  if (lk1 != lk2) {
    why["lkN"] = Json::array({lk1, lk2});
    t.fail(why);
  }
  t.count("walkSteps", static_cast<int64_t>(trace.steps.size()));
  if (o.compare_f && fits(g) && fits(walked)) {
    const LaurentPolynomial f1 = f_polynomial(c1.diagram, o.state_limit);
    const LaurentPolynomial f2 = f_polynomial(c2.diagram, o.state_limit);
    t.count("fCompared");
    if (!(f1 == f2)) {
      why["f"] = Json::array({f1.to_string(), f2.to_string()});
      t.fail(why);
    }
  }
}

void cutpath(Trial& t, Rng& rng, uint64_t, const SuiteOptions& o) {
  const auto [g, from] = draw_knot_with_cuts(rng, o.max_chords, o.max_cut_points);
  const int cap = std::max(2, from.max_count());
  const int k = rng.between(0, o.max_cut_moves);
  const auto [to, applied] = random_cut_moves(rng, g, from, k, cap);
  Json why = diagram_json(g, from);
  why["target"] = cuts_to_json(to);
  why["depth"] = k;
  why["cap"] = cap;
  const auto path = find_move_path(g, from, to, k, cap);
  if (!path) {
    why["check"] = "NOT_FOUND";
    t.fail(why);
    return;
  }
  t.count("pathsFound");
  t.count("pathLength", static_cast<int64_t>(path->size()));
  if (static_cast<int>(path->size()) > k) {
    why["check"] = "path longer than depth";
    t.fail(why);
  }
  if (apply_cut_moves(g, from, *path) != to) {
    why["check"] = "path does not replay to the target";
    t.fail(why);
  }
}

void cut_points_even(Trial& t, Rng& rng, uint64_t, const SuiteOptions& o) {
  const GaussDiagram g = random_gauss_diagram(rng, rng.between(0, o.max_chords), rng.between(1, 3));
  const CutSystem cuts = loose_cut_system(rng, g);
  Json why = diagram_json(g, cuts);
  if (!is_cut_system(g, cuts)) {
    why["check"] = "sampled cut system rejected by the checker";
    t.fail(why);
  }
  if (cuts.total() % 2 != 0) {
    why["check"] = "odd number of cut points";
    t.fail(why);
  }
  // Any odd total must be rejected.
  CutSystem odd = cuts;
  const int c = rng.below(g.circle_count());
  odd.add({c, rng.below(g.gap_count(c))}, 1);
  if (is_cut_system(g, odd)) {
    why["odd"] = cuts_to_json(odd);
    why["check"] = "odd cut system accepted";
    t.fail(why);
  }
  t.count("diagrams");

  const PDDiagram pd = random_braid_pd(rng, 6, 4);
  const auto [pg, canonical] = canonical_cut_system(pd);
  Json pwhy{{"pd", to_pd_code(pd)}, {"cuts", cuts_to_json(canonical)}};
  if (!is_cut_system(pg, canonical)) {
    pwhy["check"] = "canonical cut system rejected";
    t.fail(pwhy);
  }
  if (canonical.total() != 2 * static_cast<int>(pd.virtuals.size())) {
    pwhy["check"] = "canonical cut system size differs from twice the virtual crossings";
    t.fail(pwhy);
  }
  t.count("pdDiagrams");
  t.count("virtualCrossings", static_cast<int64_t>(pd.virtuals.size()));
}

void cover_normal(Trial& t, Rng& rng, uint64_t, const SuiteOptions& o) {
  const GaussDiagram g = random_gauss_diagram(rng, rng.between(0, o.max_chords), rng.between(1, 3));
  const CutSystem cuts = loose_cut_system(rng, g);
  const CoverResult cover = checked_cover(t, g, cuts);
  Json why = diagram_json(g, cuts);
  if (cover.diagram.chord_count() != 2 * g.chord_count()) {
    why["check"] = "cover chord count is not twice the base";
    t.fail(why);
  }
  for (const auto& [id, origin] : cover.provenance) {
    if (cover.diagram.sign(id) != g.sign(origin.original)) {
      why["check"] = "cover chord sign differs from its origin";
      t.fail(why);
      break;
    }
  }
  if (!cover.diagram.valid()) {
    why["check"] = "cover is not a valid diagram";
    t.fail(why);
  }
}

void normal_zero(Trial& t, Rng& rng, uint64_t seed, const SuiteOptions& o) {
  GaussDiagram g = random_classical_knot(rng, o.max_chords);
  const int flypes = rng.between(0, 3);
  for (int k = 0; k < flypes; ++k) {
    const auto chords = g.chords();
    g = k_flype(g, rng.pick(chords).id);
  }
  Json why{{"code", to_gauss_code(g)}};
  if (!is_normal(g)) {
    why["check"] = "flyped classical knot is not normal";
    t.fail(why);
    return;
  }
  if (odd_writhe(g) != 0) {
    why["check"] = "normal knot with nonzero odd writhe";
    t.fail(why);
  }
  const CutSystem none(g);
  const CoverResult cover = checked_cover(t, g, none);
  if (lk_n(g, none) != 0) {
    why["check"] = "lkN of a normal knot with no cut points is nonzero";
    t.fail(why);
  }
  // Empty cut system: the cover is the disjoint union of g and its mirror-switch.
  if (canonicalize(cover.diagram).diagram != canonicalize(disjoint_union(g, mirror_switch(g))).diagram) {
    why["check"] = "cover with no cut points is not G + G*";
    t.fail(why);
  }
  const auto [walked, trace] = random_walk(g, rng.between(0, o.walk_steps), Rng::derive(seed, 1), true);
  const CutSystem walked_cuts = loose_cut_system(rng, walked);
  checked_cover(t, walked, walked_cuts);
  if (const int lk = lk_n(walked, walked_cuts); lk != 0) {
    why["walked"] = diagram_json(walked, walked_cuts);
    why["trace"] = to_json(trace);
    why["lkN"] = lk;
    t.fail(why);
  }
}

void flype_f(Trial& t, Rng& rng, uint64_t, const SuiteOptions& o) {
  const int chords = rng.between(1, std::max(1, std::min(o.max_chords, o.state_limit)));
  const GaussDiagram g = random_gauss_diagram(rng, chords, rng.between(1, 2));
  const ChordId c = rng.between(1, chords);
  const GaussDiagram h = k_flype(g, c);
  Json why{{"code", to_gauss_code(g)}, {"chord", c}, {"flyped", to_gauss_code(h)}};
  if (h.sign(c) != g.sign(c)) {
    why["check"] = "flype changed the sign";
    t.fail(why);
  }
  if (is_normal(g) != is_normal(h)) {
    why["check"] = "flype changed normality";
    t.fail(why);
  }
  if (g.is_knot() && odd_writhe(g) != odd_writhe(h)) {
    why["check"] = "flype changed the odd writhe";
    t.fail(why);
  }
  const LaurentPolynomial f1 = f_polynomial(g, o.state_limit);
  const LaurentPolynomial f2 = f_polynomial(h, o.state_limit);
  if (!(f1 == f2)) {
    why["f"] = Json::array({f1.to_string(), f2.to_string()});
    t.fail(why);
  }
}

const std::vector<std::pair<std::string, TrialFn>>& suites() {
  static const std::vector<std::pair<std::string, TrialFn>> table{
      {"thm-lkN-equals-odd-writhe", lkn_equals_odd_writhe},
      {"thm-cover-invariance", cover_invariance},
      {"thm-cutpath", cutpath},
      {"cor-even", cut_points_even},
      {"prop-cover-normal", cover_normal},
      {"cor-normal-zero", normal_zero},
      {"remark-flype-f", flype_f},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.first);
    return out;
  }();
  return names;
}

Json VerificationReport::to_json() const {
  Json failures_json = Json::array();
  for (const TrialFailure& f : failures) failures_json.push_back({{"trial", f.trial}, {"seed", f.seed}, {"data", f.data}});
  Json counters_json = Json::object();
  for (const auto& [k, v] : counters) counters_json[k] = v;
  return Json{{"suite", suite},
              {"trials", options.trials},
              {"seed", options.seed},
              {"maxChords", options.max_chords},
              {"failures", failures_json},
              {"counters", counters_json},
              {"pass", passed()}};
}

VerificationReport verify_suite(const std::string& name, const SuiteOptions& options) {
  const auto& table = suites();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& s) { return s.first == name; });
  if (it == table.end()) throw PreconditionError("unknown suite: " + name);
  if (options.trials < 1) throw PreconditionError("trials must be >= 1");
  if (options.max_chords < 0) throw PreconditionError("max_chords must be >= 0");

  const auto start = std::chrono::steady_clock::now();
  const TrialFn& fn = it->second;
  std::vector<Trial> results(static_cast<std::size_t>(options.trials));
  std::vector<uint64_t> seeds(results.size());
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < options.trials; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    seeds[idx] = Rng::derive(options.seed, static_cast<uint64_t>(i));
    Rng rng(seeds[idx]);
    try {
      fn(results[idx], rng, seeds[idx], options);
    } catch (const std::exception& e) {
      results[idx].fail(Json{{"error", e.what()}});
    }
  }

  VerificationReport report;
  report.suite = name;
  report.options = options;
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const auto& [k, v] : results[i].counters) report.counters[k] += v;
    if (!results[i].failure.is_null()) report.failures.push_back({static_cast<int>(i), seeds[i], results[i].failure});
  }
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace vkc
