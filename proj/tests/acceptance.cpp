#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "vkc/cut_system.hpp"
#include "vkc/double_cover.hpp"
#include "vkc/generators.hpp"
#include "vkc/invariants.hpp"
#include "vkc/involutions.hpp"
#include "vkc/verify.hpp"

using namespace vkc;

namespace {

constexpr uint64_t kSeed = 20240917;
constexpr double kLkNSeconds = 10.0;
constexpr double kInvarianceSeconds = 30.0;
constexpr double kCoverFSeconds = 300.0;

struct Outcome {
  bool pass;
  std::string detail;
};

int64_t covers_checked = 0;
int64_t covers_normal = 0;

void tally_covers(const VerificationReport& r) {
  auto get = [&](const char* k) { return r.counters.contains(k) ? r.counters.at(k) : 0; };
  covers_checked += get("coversChecked");
  covers_normal += get("coversNormal");
}

std::string describe(const VerificationReport& r) {
  std::string s = std::to_string(r.options.trials) + " trials, " + std::to_string(r.failures.size()) + " failures";
  if (!r.failures.empty()) s += ", first: " + r.failures.front().data.dump();
  char buf[64];
  std::snprintf(buf, sizeof buf, ", %.2f s", r.elapsed_seconds);
  return s + buf;
}

Outcome lkn_equals_odd_writhe() {
  SuiteOptions o;
  o.trials = 200;
  o.seed = kSeed;
  o.max_chords = 8;
  o.max_cut_points = 6;
  const VerificationReport r = verify_suite("thm-lkN-equals-odd-writhe", o);
  tally_covers(r);
  return {r.passed() && r.elapsed_seconds < kLkNSeconds, describe(r)};
}

Outcome lkn_invariance() {
  SuiteOptions o;
  o.trials = 100;
  o.seed = kSeed;
  o.max_chords = 8;
  o.walk_steps = 12;
  o.compare_f = false;
  const VerificationReport r = verify_suite("thm-cover-invariance", o);
  tally_covers(r);
  return {r.passed() && r.elapsed_seconds < kInvarianceSeconds,
          describe(r) + ", walk steps " + std::to_string(r.counters.at("walkSteps"))};
}

Outcome cover_f_invariance() {
  SuiteOptions o;
  o.trials = 50;
  o.seed = kSeed;
  o.max_chords = 6;
  o.walk_steps = 12;
  o.compare_f = true;
  o.state_limit = 20;
  const VerificationReport r = verify_suite("thm-cover-invariance", o);
  tally_covers(r);
  const int64_t compared = r.counters.contains("fCompared") ? r.counters.at("fCompared") : 0;
  return {r.passed() && compared == o.trials && r.elapsed_seconds < kCoverFSeconds,
          describe(r) + ", f compared " + std::to_string(compared)};
}

Outcome cut_system_independence() {
  Rng rng(kSeed);
  int done = 0, bad = 0;
  while (done < 50) {
    const GaussDiagram g = random_knot(rng, rng.between(1, 8));
    const auto p = random_cut_system(rng, g, 6);
    if (!p) continue;
    const auto [q, moves] = random_cut_moves(rng, g, *p, rng.between(1, 4), std::max(2, p->max_count()));
    const auto alternatives = small_cut_systems(g, 6);
    const CutSystem other = q != *p ? q : rng.pick(alternatives);
    if (other == *p) continue;
    const CoverResult c1 = double_cover(g, *p);
    const CoverResult c2 = double_cover(g, other);
    covers_checked += 2;
    covers_normal += is_normal(c1.diagram) + is_normal(c2.diagram);
    const bool same = lk_n(g, *p) == lk_n(g, other) && f_polynomial(c1.diagram) == f_polynomial(c2.diagram);
    bad += !same;
    ++done;
  }
  return {bad == 0, std::to_string(done) + " diagrams, " + std::to_string(bad) + " mismatches"};
}

Outcome covers_normal_everywhere() {
  return {covers_checked > 0 && covers_checked == covers_normal,
          std::to_string(covers_normal) + " of " + std::to_string(covers_checked) + " covers normal"};
}

Outcome canonical_systems_even() {
  Rng rng(kSeed);
  int bad = 0, virtuals = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const PDDiagram pd = random_braid_pd(rng, 6, 4);
    try {
      const auto [g, cuts] = canonical_cut_system(pd);
      const bool ok = is_cut_system(g, cuts) && cuts.total() == 2 * static_cast<int>(pd.virtuals.size()) &&
                      cuts.total() % 2 == 0;
      bad += !ok;
    } catch (const std::exception&) {
      ++bad;
    }
    virtuals += static_cast<int>(pd.virtuals.size());
  }
  return {bad == 0, "100 PD diagrams, " + std::to_string(virtuals) + " virtual crossings, " + std::to_string(bad) +
                        " failures"};
}

Outcome move_connectivity() {
  SuiteOptions o;
  o.trials = 100;
  o.seed = kSeed;
  o.max_chords = 8;
  o.max_cut_points = 6;
  o.max_cut_moves = 6;
  const VerificationReport r = verify_suite("thm-cutpath", o);
  const int64_t found = r.counters.contains("pathsFound") ? r.counters.at("pathsFound") : 0;
  return {r.passed() && found == 100, describe(r) + ", paths found " + std::to_string(found)};
}

Outcome trefoil_values() {
  const auto [t, tc] = canonical_cut_system(parse_pd_code(fixture::trefoil_pd));
  const auto [v, vc] = canonical_cut_system(parse_pd_code(fixture::virtual_trefoil_pd));
  const int lk_t = lk_n(t, tc);
  const int lk_v = lk_n(v, vc);
  const int lk_switch = lk_n(switch_all(v), vc);
  const int lk_mirror = lk_n(mirror(v), vc);
  const bool pass = lk_t == 0 && lk_v == 2 && lk_switch == -2 && lk_mirror == -2 && !is_normal(v);
  return {pass, "trefoil " + std::to_string(lk_t) + ", virtual trefoil " + std::to_string(lk_v) + ", switched " +
                    std::to_string(lk_switch) + ", mirrored " + std::to_string(lk_mirror)};
}

Outcome oracle_equivalence() {
  Rng rng(kSeed);
  int bracket_bad = 0, parity_bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const GaussDiagram g = random_gauss_diagram(rng, rng.between(0, 6), rng.between(1, 3));
    const LaurentPolynomial expected = oracle::bracket(g);
    bracket_bad += !(kauffman_bracket(g) == expected && kauffman_bracket_serial(g) == expected);
  }
  for (int trial = 0; trial < 500; ++trial) {
    const GaussDiagram g = random_knot(rng, rng.between(0, 8));
    CutSystem c(g);
    for (int k = rng.between(0, 6); k > 0; --k) c.add({0, rng.below(g.gap_count(0))}, 1);
    parity_bad += satisfies_parity_condition(g, c) != is_cut_system(g, c);
  }
  return {bracket_bad == 0 && parity_bad == 0, "bracket mismatches " + std::to_string(bracket_bad) +
                                                   "/500, parity mismatches " + std::to_string(parity_bad) + "/500"};
}

Outcome determinism() {
  SuiteOptions o;
  o.trials = 40;
  o.seed = kSeed;
  int differing = 0;
  for (const std::string& name : suite_names()) {
    const std::string a = verify_suite(name, o).to_json().dump();
    const std::string b = verify_suite(name, o).to_json().dump();
    differing += a != b;
  }
  return {differing == 0, std::to_string(suite_names().size()) + " suites, " + std::to_string(differing) +
                              " with differing reports"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 lk_N equals odd writhe", lkn_equals_odd_writhe},
      {"2 lk_N invariant under moves and flypes", lkn_invariance},
      {"3 f of covers invariant", cover_f_invariance},
      {"4 cut-system independence", cut_system_independence},
      {"5 covers are normal", covers_normal_everywhere},
      {"6 canonical cut systems valid and even", canonical_systems_even},
      {"7 cut-move paths recovered", move_connectivity},
      {"8 trefoil and virtual trefoil lk_N", trefoil_values},
      {"9 oracle equivalence", oracle_equivalence},
      {"10 deterministic reports", determinism},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
