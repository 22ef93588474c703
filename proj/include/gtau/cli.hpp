#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gtau {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Command-line entry point. `args` excludes the program name. Output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtau
