#pragma once

// Command-line front end. `run` executes one parsed configuration and
// returns the exit code together with the rendered report.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cuspgroup/homcount.hpp"

namespace cusp::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

struct RunConfig {
  std::string subcommand;
  std::string family = "pi1";
  int n = 3;
  std::string variant = "corrected";
  std::vector<std::string> files;
  int k = 3;
  int kmax = 4;
  std::uint64_t budget = kDefaultNodeBudget;
  int strip_t1 = 2;
  std::vector<std::int64_t> primes;
  std::int64_t prime = 0;
  std::string meridians = "post";
  std::string format = "text";
};

struct RunResult {
  int exit_code = kOk;
  std::string output;
};

RunResult run(const RunConfig& config);

// Parses argv (CLI11), runs, writes the report to `out` and diagnostics
// to `err`.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cusp::cli
