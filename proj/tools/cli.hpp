#pragma once

#include <iosfwd>

namespace copos::cli {

/// Exit codes: 0 decided/solved, 1 infeasible or unbounded, 2 input
/// error, 3 numerically inconclusive.
enum Exit : int { kSolved = 0, kInfeasible = 1, kInputError = 2, kInconclusive = 3 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace copos::cli
