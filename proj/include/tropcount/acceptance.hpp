#pragma once

// The acceptance suite shared by the test binary and `tropcount selftest`.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tropcount::acceptance {

struct Options {
  std::uint64_t seed = 7;        // Mikhalkin configuration seed
  std::uint64_t sign_seed = 42;  // random real sign configurations
  int sign_trials = 20;          // per degree and per sign_t
  int max_degree = 3;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// Runs criteria 1–8 in order; `progress` sees each result as it finishes.
std::vector<CriterionResult> run_all(const Options& opt,
                                     const std::function<void(const CriterionResult&)>& progress = {});

/// "PASS  3 plane-numbers  ..." style line, without the timing when
/// `with_time` is false (for byte-stable summaries).
std::string format_line(const CriterionResult& r, bool with_time = true);

}  // namespace tropcount::acceptance
