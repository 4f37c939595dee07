#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcat::cli {

enum ExitCode : int {
  kOk = 0,
  /// A requested assertion (--assert-*, or the check a subcommand exists to run) failed.
  kAssertionFailed = 1,
  /// Bad flags, malformed input files, or inputs the computation rejects.
  kBadInput = 2,
};

const char* version();

/// One gcat invocation; `args` excludes the program name. Reports go to
/// `out` (or --output), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcat::cli
