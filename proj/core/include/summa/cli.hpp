#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace summa {

// Exit codes: 0 success, 1 a check failed, 2 unknown command / usage,
// 3 malformed input, 4 enumeration guard exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBadInput = 3;
inline constexpr int kExitGuard = 4;

// Full command-line driver; argv excludes the program name.  All report
// bytes go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& argv, std::ostream& out,
            std::ostream& err);

}  // namespace summa
