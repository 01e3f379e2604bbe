#pragma once

// Command-line front end as a library call, so that tests can drive it
// without spawning processes.

#include <iosfwd>
#include <string>
#include <vector>

namespace pslens::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kVerifyFailed = 3,
};

/// Name of the environment variable holding the default output format.
inline constexpr const char* kFormatEnv = "PSLENS_FORMAT";

/// `args` excludes the program name. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pslens::cli
