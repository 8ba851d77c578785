#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jgrog {

// Runs the command line (without the program name). Returns the process exit
// code: 0 success, 1 failed assertion or illegal strategy, 2 usage/cap/parse.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jgrog
