// Runs every exit criterion and prints one PASS/FAIL line for each, followed
// by any mismatch notes. Exits nonzero if a criterion fails.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "acceptance.hpp"

int main() {
  using namespace polycells::oracle;
  int failures = 0;
  const auto start = std::chrono::steady_clock::now();
  run_acceptance({}, [&](const CriterionResult& r) {
    if (!r.pass) ++failures;
    std::cout << format_result_line(r) << '\n';
    for (const auto& note : r.notes) std::cout << "        " << note << '\n';
    std::cout.flush();
  });
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::cout << (kCriterionCount - failures) << "/" << kCriterionCount << " criteria passed in " << std::fixed
            << std::setprecision(1) << elapsed.count() << " s\n";
  return failures == 0 ? 0 : 1;
}
