#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace balance::cli {

inline constexpr const char* kToolName = "balance";
inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "balance.run-report/1";

enum ExitCode : int {
    kSuccess = 0,   // success, accept, or a true answer
    kNegative = 1,  // reject or a false answer
    kError = 2,     // usage, parameter, or I/O error
};

/// Runs one invocation; args excludes the program name. Reports go to out,
/// diagnostics to err. Always returns 0, 1 or 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace balance::cli
