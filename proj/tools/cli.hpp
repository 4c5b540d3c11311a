#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfx::cli {

/// Exit codes: 0 all checks passed, 1 a verification failed, 2 invalid
/// input, 3 engine error (budget, zero denominator, ...).
enum ExitCode : int { kOk = 0, kMismatch = 1, kInvalid = 2, kEngine = 3 };

/// Runs one command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfx::cli
