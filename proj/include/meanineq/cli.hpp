#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace meanineq::cli {

enum ExitCode : int { kOk = 0, kViolated = 1, kUsage = 2 };

/// Runs one subcommand. `args` excludes the program name. Reports go to `out`;
/// diagnostics go to `err` as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meanineq::cli
