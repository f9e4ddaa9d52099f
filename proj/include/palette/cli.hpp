#pragma once

#include <iosfwd>

namespace palette {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Entry point of the `palette` tool. `in` backs the "-" input path.
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace palette
