#include "keyring/stress.hpp"

#include <chrono>

#include "json.hpp"
#include "keyring/extract.hpp"
#include "keyring/generate.hpp"
#include "keyring/oracle.hpp"

namespace keyring {

StressReport stress(int trials, int n, int k, int r, std::uint64_t seed) {
  if (trials < 0) throw InvalidInput("stress: negative trial count");
  StressReport report;
  report.trials = trials;
  report.n = n;
  report.k = k;
  report.r = r;
  report.seed = seed;

  for (int trial = 0; trial < trials; ++trial) {
    const std::uint64_t trial_seed = seed + static_cast<std::uint64_t>(trial);
    auto record = [&](const std::string& stage, const std::string& message) {
      report.failures.push_back({trial, trial_seed, stage, message});
    };
    auto run_trial = [&]() -> bool {
      try {
        Graph g = gen_random_dense(n, k, trial_seed);
        EngineOptions opts;
        opts.audit_structure = true;
        opts.audit_properties = n <= 10;
        Keyring kr;
        try {
          kr = extract(g, k, r, opts);
        } catch (const InternalError& e) {
          record("audit", e.what());
          ++report.audit_failures;
          return false;
        }
        std::string why;
        if (!verify_keyring(g, kr, k, r, &why)) {
          record("verify", why);
          return false;
        }
        if (n <= 12) {
          ++report.oracle_checked;
          if (!oracle_exists_keyring(g, k, r)) {
            record("oracle", "extraction succeeded but the oracle finds no keyring");
            return false;
          }
          ++report.oracle_agreements;
        }
        return true;
      } catch (const Error& e) {
        record("extract", e.what());
        return false;
      }
    };
    const auto start = std::chrono::steady_clock::now();
    if (run_trial()) ++report.successes;
    const auto elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (elapsed > report.max_trial_ms) report.max_trial_ms = elapsed;
  }
  return report;
}

std::string to_text(const StressReport& report, bool include_timings) {
  std::string out;
  out += "trials: " + std::to_string(report.trials) + "\n";
  out += "n: " + std::to_string(report.n) + " k: " + std::to_string(report.k) +
         " r: " + std::to_string(report.r) + " seed: " + std::to_string(report.seed) +
         "\n";
  out += "successes: " + std::to_string(report.successes) + "\n";
  out += "oracle_checked: " + std::to_string(report.oracle_checked) + "\n";
  out += "oracle_agreements: " + std::to_string(report.oracle_agreements) + "\n";
  out += "audit_failures: " + std::to_string(report.audit_failures) + "\n";
  out += "failures: " + std::to_string(report.failure_count()) + "\n";
  for (const auto& f : report.failures)
    out += "  trial " + std::to_string(f.trial) + " seed " + std::to_string(f.trial_seed) +
           " [" + f.stage + "] " + f.message + "\n";
  if (include_timings)
    out += "max_trial_ms: " + std::to_string(report.max_trial_ms) + "\n";
  return out;
}

std::string to_json(const StressReport& report, bool include_timings) {
  nlohmann::ordered_json j;
  j["trials"] = report.trials;
  j["n"] = report.n;
  j["k"] = report.k;
  j["r"] = report.r;
  j["seed"] = report.seed;
  j["successes"] = report.successes;
  j["oracle_checked"] = report.oracle_checked;
  j["oracle_agreements"] = report.oracle_agreements;
  j["audit_failures"] = report.audit_failures;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    nlohmann::ordered_json jf;
    jf["trial"] = f.trial;
    jf["seed"] = f.trial_seed;
    jf["stage"] = f.stage;
    jf["message"] = f.message;
    j["failures"].push_back(jf);
  }
  if (include_timings) j["max_trial_ms"] = report.max_trial_ms;
  return j.dump(2) + "\n";
}

}  // namespace keyring
