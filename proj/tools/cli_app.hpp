#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nodal_hodge::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kVerificationFailure = 2,
  kResourceLimit = 3,
};

/// Runs the command line with `args` (excluding the program name), writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nodal_hodge::cli
