#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmcells::cli {

/// Exit codes of the command-line tool.
enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInvalidInput = 2,
  kLimit = 3,
  kInternal = 4,
};

/// Runs one command line (argv[0] is the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cmcells::cli
