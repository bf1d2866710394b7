#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ladget::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the `ladget` command line with args (excluding the program name).
/// Standard input is read from `in` when a stream path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ladget::cli
