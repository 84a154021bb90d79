#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jones::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;      // bad arguments, unparsable input, caps
inline constexpr int kViolation = 2;  // a checked statement failed

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jones::cli
