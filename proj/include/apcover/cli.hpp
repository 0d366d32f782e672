#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace apcover {

// Exit-status contract shared by every subcommand.
enum ExitStatus : int {
    exit_yes = 0,       // yes / decision found / valid / suites pass
    exit_usage = 1,     // usage or parse error
    exit_capacity = 2,  // configured capacity exceeded
    exit_no = 3,        // no / invalid / property violation
};

// Runs the command line given as argv-style arguments (without the program
// name). Reports go to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apcover
