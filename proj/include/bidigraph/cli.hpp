#pragma once

#include <iosfwd>

namespace bidi {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNo = 1,
  kExitUsage = 2,
  kExitInput = 3,
  kExitCap = 4,
};

/// Runs the command-line tool. Graph input is read from the file argument,
/// or from `in` when it is absent or "-".
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace bidi
