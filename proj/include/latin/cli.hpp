#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latin {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_failed = 1,       ///< verification failure or theorem mismatch
    exit_usage = 2,
    exit_inconclusive = 3, ///< search budget exhausted
};

/// Runs one command line (without the program name) and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace latin
