#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symproj::cli {

/// Runs the command line `args` (program name first). Returns the process
/// exit code: 0 success, 2 input error or bad usage, 3 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symproj::cli
