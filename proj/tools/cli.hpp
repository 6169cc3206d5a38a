#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symmaps::cli {

// Exit codes of the command-line tool.
constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

// Parses args (without the program name) and executes the subcommand.
// Results go to `out` unless --output names a file; diagnostics go to `err`.
// `in` supplies map records when --input is absent or "-".
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace symmaps::cli
