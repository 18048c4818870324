#pragma once

#include <ostream>

namespace orbiroot {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitDomainError = 1,
    kExitVerificationFailure = 2,
};

/// Entry point of the `orbiroot` tool; writes results to `out` and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbiroot
