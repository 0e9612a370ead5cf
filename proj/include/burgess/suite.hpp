#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "burgess/common.hpp"

namespace burgess {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  double budget_seconds = 0.0;  // 0 = no stated budget
  std::string detail;
};

struct SuiteOptions {
  int jobs = 1;
};

// Runs the full verification battery: table reproductions, the threshold,
// and the desk-scale exhaustive/property sections. One result per section;
// budgets are enforced as part of the pass verdict. Progress lines go to
// *progress when non-null.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& opt,
                                                  std::ostream* progress = nullptr);

void print_criterion(std::ostream& os, const CriterionResult& c);

}  // namespace burgess
