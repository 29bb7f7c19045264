#pragma once

#include <iosfwd>

namespace combi::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Parses argv and runs one subcommand. Results go to `out`, diagnostics to
/// `err`; the return value is the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace combi::cli
