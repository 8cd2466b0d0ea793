#pragma once

#include <iosfwd>

namespace pisano::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kUsageError = 2,
  kAssertionFailure = 3,
};

// Entry point behind the `pisano` executable. Results go to `out`,
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pisano::cli
