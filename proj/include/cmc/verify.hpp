#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cmc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs acceptance criteria 1-11 in order.
std::vector<CriterionResult> run_acceptance();

/// One "PASS"/"FAIL" line per criterion.
void print_results(std::ostream& out, const std::vector<CriterionResult>& results);

/// Runs, prints and returns 0 when every criterion passed, 1 otherwise.
int verify_main(std::ostream& out);

}  // namespace cmc
