// sexakit command-line frontend.
//
// Exit status: 0 success, 1 verification mismatch, 2 unreadable input,
// 3 violated mathematical precondition.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sexakit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitMath = 3;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sexakit::cli
