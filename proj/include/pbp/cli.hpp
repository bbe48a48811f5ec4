#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pbp::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kVerificationFailed = 3,
};

/// Runs one command line. `args` excludes the program name. Normal output goes
/// to `out`; diagnostics and usage text go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pbp::cli
