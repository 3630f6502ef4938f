#pragma once

#include <ostream>

namespace klrpoly {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitCounterexample = 1,
  kExitUsage = 2,
};

/// Runs the `klrpoly` command line. Output is assembled per command and
/// written to `out` once; diagnostics go to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace klrpoly
