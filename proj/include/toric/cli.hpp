#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitTheorem = 3;

/// Runs the command-line interface on `args` (args[0] is the program name).
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace toric
