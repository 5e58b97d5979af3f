#pragma once

#include <string>
#include <vector>

namespace finsurg::selftest {

/// Outcome of one acceptance check. Every check is an exact-arithmetic
/// property verified at desk scale; there are no tolerances anywhere.
struct CheckResult {
  int id = 0;
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Names of the known suites, in execution order.
std::vector<std::string> suite_names();

/// Runs every check whose suite matches the filter ("" = all).
/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run(const std::string& suite_filter = "");

}  // namespace finsurg::selftest
