#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edcert::cli {

enum ExitCode : int {
    exit_true = 0,         // success, verdict true, property holds
    exit_false = 1,        // inconclusive, verdict false, property fails
    exit_usage = 2,        // bad flags, parse errors, precondition violations
};

// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace edcert::cli
