#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conserv {

/// Exit codes of run_command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `conserv` subcommand. `args` excludes the program name. Reports
/// go to `out` (or to the file named by --out), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conserv
