#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace takeuchi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. Results go to --out
/// or `out`; errors are written to `err` as one JSON object per line.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace takeuchi::cli
