#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conway::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kSyntaxError = 1;
inline constexpr int kIllStarred = 2;
inline constexpr int kOverflow = 3;
inline constexpr int kMalformedJson = 4;
inline constexpr int kUnknownSuite = 5;
inline constexpr int kCheckFailed = 6;
inline constexpr int kOtherError = 7;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conway::cli
