#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsi::cli {

/// Process exit statuses.
enum ExitCode : int {
    exit_true = 0,
    exit_false = 1,
    exit_budget = 2,
    exit_usage = 64,     // EX_USAGE
    exit_data = 65,      // EX_DATAERR: parse errors and inputs outside an operation's domain
    exit_no_input = 66,  // EX_NOINPUT: unreadable file
    exit_internal = 70,  // EX_SOFTWARE: invariant violation
};

/**
 * Runs one command line. `args` excludes the program name. Normal output goes
 * to `out`, diagnostics to `err`; the return value is the process exit status.
 */
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hsi::cli
