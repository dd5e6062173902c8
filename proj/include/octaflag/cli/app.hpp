#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace octaflag::cli {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on `args` (without the program name). Reports and data go
/// to `out`, diagnostics and timing to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octaflag::cli
