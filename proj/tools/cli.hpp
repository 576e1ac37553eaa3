#pragma once

#include <iosfwd>

namespace inforank::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kConfigError = 2,
  kParseError = 3,
  kSolverError = 4,
  kUndefinedIndex = 5,
};

// Entry point shared by the executable and the tests. Reports go to `out`
// unless --output names a file; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace inforank::cli
