#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace galg::cli {

enum ExitCode { kOk = 0, kMathFailure = 1, kUsage = 2 };

// Runs one command line (without the program name); JSON report goes to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galg::cli
