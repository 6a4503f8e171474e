// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include <cstring>
#include <iostream>

#include "laplacext/selftest.hpp"

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  }
  auto results = laplacext::selftest::run_all(quick);
  int failures = laplacext::selftest::report(results, std::cout);
  if (failures > 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
