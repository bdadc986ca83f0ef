#pragma once

#include <iosfwd>

namespace altsplit {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
    kExitOk = 0,
    kExitNotConverged = 1,  ///< solve hit max iterations; verify found failures
    kExitBadInput = 2,      ///< bad flags, unreadable or malformed files
    kExitDimension = 3,
    kExitNoGroupInverse = 4,
};

/// Entry point for `altsplit classify|solve|bench|verify`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace altsplit
