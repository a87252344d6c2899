#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace indkernel {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,        // success, or the checked property holds
    exit_negative = 1,  // unprovable, not covered, or a check fails
    exit_input = 2,     // bad arguments or unreadable/invalid input
};

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace indkernel
