#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polgeom::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kDomainError = 3,
  kNotConverged = 4,
};

/// Runs the command line `args` (without the program name). Data goes to `out`
/// unless --out is given; diagnostics always go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed 17-significant-digit rendering used for every number in CSV output.
std::string format_number(double value);

}  // namespace polgeom::cli
