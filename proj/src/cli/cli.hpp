#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fullerene::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kProvenNegative = 2,
  kBudgetExceeded = 3,
};

/// Runs one command line (without the program name). The report is written
/// to `out`, or to `--report FILE` when given; artifacts without `--out`
/// go to `out` and the report then goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fullerene::cli
