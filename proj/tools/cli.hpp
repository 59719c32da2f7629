#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grpiso::cli {

/// Exit codes of run_command.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,      // not-isomorphic, no map, invalid map, selftest failure
  kInputError = 2,    // bad arguments, unparsable specs or files
  kInconsistency = 3, // oracle inconsistency detected by a reduction
};

/// Runs one grpiso subcommand. args excludes the program name.
int run_command(const std::vector<std::string> &args, std::ostream &out,
                std::ostream &err);

} // namespace grpiso::cli
