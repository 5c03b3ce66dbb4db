#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spliceidx::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,       ///< unreadable or malformed input; verify: mismatches
  kValidationError = 2,  ///< bad graph, bad glue ids, bad flags
  kOverflow = 3,
  kInternalError = 4,  ///< bench counter relation violated
};

/// Runs the command line `args` (args[0] is the program name). Results go
/// to `out` only on success; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace spliceidx::cli
