// Runs the full acceptance battery and prints one PASS/FAIL line per
// criterion; exit status 0 only if every criterion passes.
#include <cstdio>
#include <iostream>

#include "burgess/suite.hpp"

int main() {
  burgess::SuiteOptions opt;
  opt.jobs = 1;
  std::vector<burgess::CriterionResult> results = burgess::run_acceptance_suite(opt, &std::cout);
  int failed = 0;
  for (const auto& c : results)
    if (!c.pass) ++failed;
  if (failed) std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
