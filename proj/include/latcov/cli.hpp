#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latcov {

/// Exit codes: 0 success or affirmative verdict, 1 negative verdict of a
/// predicate command, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latcov
