#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agmon::cli {

enum ExitStatus : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

/// Runs one invocation of the agmon tool. `args` excludes the program name.
/// Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agmon::cli
