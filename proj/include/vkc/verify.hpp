#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vkc/json_io.hpp"

namespace vkc {

struct SuiteOptions {
  int trials = 100;
  uint64_t seed = 0;
  int max_chords = 8;
  int max_cut_points = 6;
  int walk_steps = 12;
  int max_cut_moves = 6;
  /// thm-cover-invariance: also compare f-polynomials of the covers. Walks are
  /// redrawn until both covers fit the state limit.
  bool compare_f = true;
  int state_limit = 20;
};

struct TrialFailure {
  int trial = 0;
  uint64_t seed = 0;
  Json data;  // everything needed to reproduce the failure
};

struct VerificationReport {
  std::string suite;
  SuiteOptions options;
  std::vector<TrialFailure> failures;
  std::map<std::string, int64_t> counters;  // suite-specific tallies
  double elapsed_seconds = 0;

  bool passed() const { return failures.empty(); }
  /// Deterministic for a given suite and options (no timing).
  Json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Runs a named property suite; trial i uses the stream Rng::derive(seed, i).
/// Throws PreconditionError for an unknown suite or trials < 1.
VerificationReport verify_suite(const std::string& name, const SuiteOptions& options);

}  // namespace vkc
