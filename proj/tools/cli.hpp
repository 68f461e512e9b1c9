#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hdecomp::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 1;
inline constexpr int kBudget = 2;
inline constexpr int kMismatch = 3;

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hdecomp::cli
