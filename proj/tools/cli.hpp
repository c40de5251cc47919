#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcong::cli {

/// Exit codes: 0 success, 1 operational error, 2 counterexample found.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCounterexample = 2;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcong::cli
