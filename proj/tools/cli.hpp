#pragma once

#include <ostream>

namespace tdorbit::cli {

// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kBadFlags = 2;
inline constexpr int kBudgetExceeded = 3;

// Parses argv (argv[0] is the program name), runs one subcommand and writes
// its report to `out` (or to --output). Diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tdorbit::cli
