#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mbd {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs the command line `args` (without the program name). `in` feeds the
/// play REPL.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mbd
