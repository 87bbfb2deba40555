#pragma once

// The exit criteria, each run at full depth against the reference tables and
// the brute-force oracles. Every check is exact.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace polycells::oracle {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string summary;             // one line
  std::vector<std::string> notes;  // mismatches and supporting evidence
};

struct AcceptanceOptions {
  /// Largest polygon (criteria 5, 6) or tree (criterion 8) examined. Values
  /// below 10 give a partial run, which is reported as such.
  int max_size = 10;
  std::uint64_t seed = 20240611;
  int property_cases = 1000;
};

inline constexpr int kCriterionCount = 11;

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

/// Runs all criteria in order; `on_result` sees each result as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  3  title: summary"
std::string format_result_line(const CriterionResult& r);

}  // namespace polycells::oracle
