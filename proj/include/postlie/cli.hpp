#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace postlie::cli {

/// Runs one subcommand; `args` excludes the program name. The report goes to
/// `out` (or the --output file), diagnostics and usage to `err`.
/// Exit codes: 0 ok, 1 violations found, 2 input or usage error, 3 internal
/// consistency failure.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace postlie::cli
