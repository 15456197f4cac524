#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latcon::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // valid query, negative answer
inline constexpr int kUsage = 2;     // usage or input error

// Runs one command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latcon::cli
