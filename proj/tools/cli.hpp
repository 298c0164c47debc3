#pragma once

#include <string>
#include <vector>

namespace finprime::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kResourceLimit = 2, kInputError = 3 };

struct CommandReport {
    int exit_code = kOk;
    std::string out;
    std::string err;
};

// argv excludes the program name.
CommandReport run_command(const std::vector<std::string>& argv);

}  // namespace finprime::cli
