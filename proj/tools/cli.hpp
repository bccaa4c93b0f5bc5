#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shortpoly::cli {

/// Process exit codes.
enum ExitCode : int {
    ok = 0,
    internal_error = 1,  // unexpected failure, including relation invariant violations
    input_error = 2,     // bad arguments, unreadable or malformed input
    budget_exhausted = 3,
    bound_violated = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace shortpoly::cli
