#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cofree {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns an ExitCode.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cofree
