#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsd::cli {

/// Exit codes: dominance holds / verification passes.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kError = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsd::cli
