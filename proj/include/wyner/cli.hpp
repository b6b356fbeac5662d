#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wyner::cli {

inline constexpr char const* kVersion = "0.1.0";

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kMismatch = 2,
    kIo = 3,
};

/// Entry point behind the `wynerzf` binary. `args` excludes the program
/// name. Subcommands: sweep, verify, trace, table.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace wyner::cli
