#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankfuzz::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kInputError = 2,     ///< parse or validation failure
    kMismatch = 3,       ///< rankings over different item sets
    kInternalError = 4,  ///< invariant violation or unexpected failure
};

/// Runs the tool with `args` (program name first) and returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankfuzz::cli
