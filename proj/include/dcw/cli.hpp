#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dcw::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kResourceCap = 3,
};

/// Runs one command line (without the program name), writing results to
/// `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcw::cli
