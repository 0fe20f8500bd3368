#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ndbound::cli {

enum ExitCode : int { kOk = 0, kUsageError = 1, kVerificationFailed = 2 };

// Runs the command line `args` (args[0] is the program name). Data goes to
// `out`, diagnostics to `err`; `in` backs the "-" topology path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ndbound::cli
