#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uqsl2::cli {

inline constexpr int kSuccess = 0;
inline constexpr int kMathFailure = 1;
inline constexpr int kUsageError = 2;

// args excludes the program name.  Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace uqsl2::cli
