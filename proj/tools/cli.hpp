#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xjoin::cli {

/// Exit codes of the xjoin command.
enum ExitCode : int {
  kOk = 0,
  kOracleMismatch = 1,
  kUsageError = 2,
  kInternalError = 3,
  kSizeLimit = 4,
  kNotReduced = 5,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace xjoin::cli
