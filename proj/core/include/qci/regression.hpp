#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qci {

struct RegressionOptions {
  std::uint64_t seed = 1;
  std::uint32_t prime = 101;
  std::size_t quadric_trials = 25;
  std::size_t property_instances = 100;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::string> details;  // one line per sub-check, prefixed "ok" or "FAIL"
  double seconds = 0;
};

inline constexpr int criterion_count = 12;

const std::string& criterion_name(int id);

// Runs one criterion. Library errors are caught and reported as failures.
CriterionResult run_criterion(int id, const RegressionOptions& options = {});

// Runs criteria 1..12 in order, calling `on_result` after each one.
std::vector<CriterionResult> run_regression(const RegressionOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  3 name (1.2 s)" style line.
std::string summary_line(const CriterionResult& r);

}  // namespace qci
