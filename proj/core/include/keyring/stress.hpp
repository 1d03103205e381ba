#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "keyring/graph.hpp"

namespace keyring {

struct StressFailure {
  int trial = 0;
  std::uint64_t trial_seed = 0;
  std::string stage;    // generate | extract | verify | audit | oracle
  std::string message;  // minimal reproducing input is (n, k, r, trial_seed)
};

struct StressReport {
  int trials = 0;
  int n = 0;
  int k = 0;
  int r = 0;
  std::uint64_t seed = 0;
  int successes = 0;
  int oracle_checked = 0;
  int oracle_agreements = 0;
  int audit_failures = 0;
  double max_trial_ms = 0.0;
  std::vector<StressFailure> failures;

  int failure_count() const { return static_cast<int>(failures.size()); }
};

/// Per trial: generate a dense graph from (n, k, seed + trial), run the full
/// extraction, verify the result, audit the closure structures, and compare
/// against the exhaustive oracle when n <= 12. Failures are recorded, never
/// thrown.
StressReport stress(int trials, int n, int k, int r, std::uint64_t seed);

/// Reports are byte-stable; wall-clock timing is only included on request.
std::string to_text(const StressReport& report, bool include_timings = false);
std::string to_json(const StressReport& report, bool include_timings = false);

}  // namespace keyring
