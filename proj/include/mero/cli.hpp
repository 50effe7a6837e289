#pragma once

#include <ostream>

namespace mero::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  ///< failed check or disproof
    kExitUsage = 2,    ///< bad flags, unreadable input, unwritable output
};

/// Entry point behind the `mero` binary; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mero::cli
