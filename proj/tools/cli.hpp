#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace foursq::cli {

enum ExitCode : int {
  kOk = 0,
  kFound = 1,     ///< counterexample, failed check, or checkpoint mismatch
  kUsage = 2,
  kInternal = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foursq::cli
