#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twistcalc::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 usage or I/O error.
enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// `args` excludes the program name.  Reports go to `out`, diagnostics to
/// `err`; the last line on `out` is always `RESULT <name> <PASS|FAIL>` for
/// commands that reach a verdict.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twistcalc::cli
