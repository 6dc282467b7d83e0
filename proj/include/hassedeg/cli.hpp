#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hassedeg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

// Runs the command line `args` (without the program name) and returns the
// exit code. All output goes to `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hassedeg::cli
