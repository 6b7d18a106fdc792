#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dhg::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;         // bad or missing flags
inline constexpr int kExitInput = 3;         // unreadable or malformed input
inline constexpr int kExitPrecondition = 4;  // algorithm cannot run on this graph

inline constexpr const char* kVersion = "0.1.0";

/// Runs the tool with `args` (excluding the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dhg::cli
