#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pduty::cli {

/// Stable process exit codes.
enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv);

}  // namespace pduty::cli
