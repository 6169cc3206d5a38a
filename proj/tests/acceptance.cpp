// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "symmaps/verify.hpp"

int main(int argc, char **argv) {
  symmaps::VerifyOptions opts;
  if (argc > 1) opts.jobs = std::max(1, std::atoi(argv[1]));
  bool all = true;
  for (int id = 1; id <= symmaps::kCriteria; ++id) {
    const auto r = symmaps::run_check(id, opts);
    all = all && r.passed;
    std::printf("AC%d %s  %s (%.2f s): %s\n", id, r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                r.details.c_str());
    std::fflush(stdout);
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
