#pragma once

#include <string>
#include <vector>

namespace crystile {

struct CliResult {
    int exit_code;
    std::string output;
};

// Runs the command line (without the program name) and captures stdout.
// Exit codes: 0 success, 1 verification diff or failure, 2 invalid
// parameters, 3 out of regime.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace crystile
