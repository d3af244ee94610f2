#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace semigraph::cli {

/// Exit codes of the command line front end.
enum ExitCode : int {
  kSuccess = 0,
  kRejected = 1,  ///< not semigraphical, invalid semigraph, bound violated
  kUsage = 2,     ///< bad arguments, unreadable file, syntax error
};

/// Fixed-point text with 10 significant digits; values below 5e-11 in
/// magnitude print as zero.
std::string format_real(double x);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace semigraph::cli
