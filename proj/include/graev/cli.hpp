#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graev {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // NONE, FAIL, UNKNOWN, "no"
inline constexpr int kExitUsage = 2;     // bad flags, unparsable input

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graev
