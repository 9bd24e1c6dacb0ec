#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mnconvex::cli {

inline constexpr const char* kToolVersion = "1.0.0";

// Exit codes of run().
enum ExitCode : int {
  kAllHold = 0,
  kCheckFailed = 1,
  kUsageError = 2,
  kInconclusive = 3,
};

// Runs one command line (argv[0] is the program name). Reports go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace mnconvex::cli
