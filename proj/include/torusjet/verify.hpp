#pragma once

// The property suite behind `torusjet verify`: every computable identity and
// inequality of the library, checked on seeded random instances against
// independent brute-force oracles. Each check draws from its own derived seed.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace torusjet {

struct SuiteOptions {
  std::uint64_t seed = 1;
  int trials = 50;
  int max_d = 3;
  int max_k = 3;
  bool inject_fault = false;        // corrupts the centered Θ form
  std::vector<std::string> only;    // run only these checks when nonempty
  std::vector<int> criteria;        // run only these groups when nonempty
};

struct CheckResult {
  std::string name;
  int group = 0;
  bool pass = true;
  long instances = 0;
  double worst = 0.0;      // largest observed error (or excess over the bound)
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  std::string failure;     // first failing instance
  std::string repro;
  double seconds = 0.0;
};

struct Measurement {
  std::string name;
  int group = 0;
  double value = 0.0;
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<CheckResult> checks;
  std::vector<Measurement> measurements;

  bool all_pass() const;
};

/// Number of check groups (1-based).
constexpr int kSuiteGroups = 9;

SuiteReport run_suite(const SuiteOptions& options);

/// Report JSON; per-check runtimes are included only when timing is true.
nlohmann::json to_json(const SuiteReport& report, bool timing = false);

}  // namespace torusjet
