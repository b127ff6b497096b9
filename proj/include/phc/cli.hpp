#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace phc {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInfeasible = 2,
  kExitHypothesis = 3,
  kExitTimeout = 4,
};

/// Runs one command line (without the program name). Graph input named "-"
/// is read from `in`; output goes to `out` unless --output names a file.
/// Diagnostics and usage text go to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace phc
