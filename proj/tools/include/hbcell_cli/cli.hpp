#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbcell::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kInternalDefect = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbcell::cli
