#pragma once

#include <functional>
#include <string>
#include <vector>

namespace symmaps {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string details;
  double seconds = 0;
};

struct VerifyOptions {
  int symmetric_cap = 9; // inner faces of symmetric maps
  int jobs = 1;
};

// Runs fn(0..n-1) on up to `jobs` threads. Callers write results by index,
// so output order never depends on scheduling. The first exception thrown
// by any task is rethrown after all threads join.
void parallel_for(int n, int jobs, const std::function<void(int)> &fn);

// Acceptance criteria 1..10. Budgets on running time are part of the checks.
constexpr int kCriteria = 10;
CheckResult run_check(int id, const VerifyOptions &opts);
std::vector<CheckResult> run_checks(const std::vector<int> &ids, const VerifyOptions &opts);
std::string check_name(int id);

} // namespace symmaps
