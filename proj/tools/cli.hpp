#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chromhopf::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 1 when a checked identity fails, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chromhopf::cli
