#pragma once

// Command-line front end. Kept in the library so tests can drive it without a process.

#include <iosfwd>
#include <string>
#include <vector>

namespace eqlines::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudgetExceeded = 3 };

// args excludes the program name. JSON (or CSV for spectrum) goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqlines::cli
