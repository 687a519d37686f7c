#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace observa::cli {

enum ExitCode : int {
    success = 0,
    negative = 1,
    input_error = 2,
    budget_exceeded = 3,
};

/// Runs one command line. `args` excludes the program name; "-" as an input
/// path reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace observa::cli
