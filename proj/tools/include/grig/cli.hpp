#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grig::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kUnsupported = 3 };

/// Runs the tool on argv[1..]; everything goes to out/err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grig::cli
