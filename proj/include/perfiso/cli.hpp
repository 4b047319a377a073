#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perfiso {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitNegative = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace perfiso
