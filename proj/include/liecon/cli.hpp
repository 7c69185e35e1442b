#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liecon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCounterexample = 2;

/// Runs one command. `args` excludes the program name.
/// Returns 0 on success, 1 on usage, parse or verification errors, 2 when the
/// conjecture harness finds a non-contained multidegree.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liecon::cli
