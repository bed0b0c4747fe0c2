#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "primecurtain/primes.hpp"

namespace primecurtain::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured value(s) against the pinned threshold
  double seconds = 0.0;
};

// Criteria 1-5 run over the first 10^6 + 1 primes.  The table overload lets
// tests share a prebuilt table or inject faults; `build_seconds` is added to
// criterion 1's runtime budget, which covers table construction.
std::vector<CriterionResult> series_criteria(const PrimeTable& table,
                                             double build_seconds = 0.0);
std::vector<CriterionResult> series_criteria();

std::vector<CriterionResult> cramer_criteria();    // criteria 6-8
std::vector<CriterionResult> gaussian_criteria();  // criteria 9-13
std::vector<CriterionResult> numerics_criteria();  // criterion 14

// Criterion 15: byte-identical seeded reruns plus the total time budget;
// `elapsed_before` is what the earlier criteria took.
std::vector<CriterionResult> determinism_criteria(double elapsed_before);

// suite: "series", "cramer", "gaussian", or "all" (all 15 criteria).
std::vector<CriterionResult> run_suite(const std::string& suite);

// One line per criterion; returns 0 iff every criterion passed.
int report(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace primecurtain::acceptance
