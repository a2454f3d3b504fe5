#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace spinkin::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command. `args` excludes the program name. JSON goes to `out`,
/// diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinkin::cli
