// Acceptance suite: runs every check and prints one pass/fail line per
// criterion. Exit status is nonzero when any check fails.

#include "finsurg/selftest.hpp"

#include <cstdio>

int main() {
  const auto results = finsurg::selftest::run();
  int failures = 0;
  for (const auto& r : results) {
    std::printf("[%s] %2d %s/%s: %s\n", r.passed ? "PASS" : "FAIL", r.id, r.suite.c_str(),
                r.name.c_str(), r.detail.c_str());
    if (!r.passed) ++failures;
  }
  std::printf("%zu/%zu acceptance checks passed\n", results.size() - failures, results.size());
  return failures == 0 ? 0 : 1;
}
