#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chainperm::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRefuted = 1,
  kExitUsage = 2,
};

/// Runs the command line `args` (without the program name). Environment
/// variables CHAINPERM_MAX_N and CHAINPERM_JOBS supply defaults that the
/// --max-n and --jobs flags override.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chainperm::cli
