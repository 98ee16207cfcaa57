#ifndef ZETAVAL_TOOLS_CLI_HPP
#define ZETAVAL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace zetaval::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2 };

/// Runs the command line `args` (program name excluded). Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zetaval::cli

#endif
