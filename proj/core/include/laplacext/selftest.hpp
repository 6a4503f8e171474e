#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace laplacext::selftest {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs the acceptance criteria in order and returns one result each.
// quick trims the random-sample counts; every criterion still runs.
std::vector<CriterionResult> run_all(bool quick = false);

// Prints one "[PASS]/[FAIL] criterion N: ..." line per result; returns the
// number of failures.
int report(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace laplacext::selftest
