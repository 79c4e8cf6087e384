#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fibquiver::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitRuntime = 3,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fibquiver::cli
