#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace freezetag::cli {

/// Exit codes of the ftag tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kBoundViolation = 3,
};

/// Runs one ftag invocation. args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freezetag::cli
