#ifndef EXTNUM_CLI_HPP
#define EXTNUM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace extnum {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitEvalError = 1,
  kExitAuditFailure = 2,
  kExitUsage = 64,
};

/// Runs `extnum <args...>` (args excludes the program name):
///   eval <expr> [--json]
///   cmp <e1> <e2> [--json]
///   audit [--seed N] [--trials N] [--axiom ID[,ID...]] [--json]
///   repl
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace extnum

#endif  // EXTNUM_CLI_HPP
