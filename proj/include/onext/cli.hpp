#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace onext::cli {

// Stable exit-code contract.
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;
inline constexpr int kResourceError = 3;

// Runs one command line (args[0] is the program name). `in` backs the "-" input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace onext::cli
