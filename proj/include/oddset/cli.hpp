#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddset {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitClaimFailed = 1,  // verify/audit/search ran but the claim does not hold
  kExitUsage = 2,        // bad flags, unreadable or malformed input, failed precondition
};

/// Runs one command. args excludes the program name. JSON goes to `out`,
/// one-line diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddset
