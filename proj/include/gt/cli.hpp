#pragma once

#include <string>
#include <vector>

namespace gt {

/// Exit codes: 0 success, 1 invariant/verification failure, 2 input
/// error, 3 domain-precondition error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDomainError = 3;

struct CliResult {
  int exit_code = 0;
  std::string out;  // result document (stdout)
  std::string err;  // diagnostics (stderr)
};

/// Run one CLI command; args exclude the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace gt
