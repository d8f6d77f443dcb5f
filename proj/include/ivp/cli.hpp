#pragma once

#include <exception>
#include <string>
#include <vector>

namespace ivp::cli {

enum ExitCode : int {
    kAffirmative = 0,
    kNegative = 1,
    kUsageError = 2,
    kInternalError = 3,
};

struct CommandResult {
    int exit_code = kAffirmative;
    std::string out;
    std::string err;
};

struct Options {
    bool color = false;  ///< ANSI styling of verdicts in text output
};

/// Runs one command line (without the program name) and captures its output.
CommandResult run(const std::vector<std::string>& args, const Options& options = {});

/// Exit code for an exception escaping a command: input and precondition
/// errors map to kUsageError, anything else to kInternalError.
int exit_code_for(std::exception_ptr error);

} // namespace ivp::cli
