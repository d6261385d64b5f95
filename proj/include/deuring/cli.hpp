#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deuring {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitInvalidInput = 2 };

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The property suite behind `verify`: every prime of degree <= max_degree
/// over F_q, plus the prime-independent identities up to index max_degree.
std::vector<CheckResult> run_verification(unsigned q, unsigned max_degree);

/// Entry point of the `deuring` tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace deuring
