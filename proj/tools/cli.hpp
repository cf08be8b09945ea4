#pragma once

#include <iosfwd>

namespace intsel::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitBoundViolation = 3,
};

// Entry point of the `intsel` tool; writes results to `out` and diagnostics
// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace intsel::cli
