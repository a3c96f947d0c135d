#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace foxjump {

/// Exit statuses of the command-line tool.
enum ExitStatus : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace foxjump
