#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace regulus::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kVerificationFailure = 2,
  kInternalError = 3,
};

/// Runs one command line; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace regulus::cli
