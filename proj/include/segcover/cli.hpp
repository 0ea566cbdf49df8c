#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace segcover {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitUsageError = 3;
inline constexpr int kExitInternalError = 4;

// Entry point of the `segcover` tool. args[0] is the program name.
// Subcommands: solve, generate, bench, reduce, segment, mst.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segcover
