#pragma once

#include <iosfwd>

namespace wcert::cli {

/// Exit codes of the command-line front-end.
enum ExitCode : int {
    kSuccess = 0,
    kSoundnessViolation = 1,  // survey only
    kUnsatisfied = 2,         // condition unsatisfied, domain violation, no convergence
    kInvalidInput = 3,
};

/// Runs the CLI with the given arguments (argv[0] is the program name).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wcert::cli
