#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vpoly::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

// Parses argv (argv[0] is the program name), runs one subcommand and writes
// its report to `out`. Diagnostics and usage text go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct Claim {
  std::string key;
  bool passed = false;
  std::string detail;
};

// Reproduction checks behind `vpoly selftest`.
std::vector<Claim> run_selftest();

}  // namespace vpoly::cli
