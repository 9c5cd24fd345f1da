#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace afprov::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kNoCriticalSet = 3,  // NoCriticalSetFound or BudgetExceeded
  kOracleMismatch = 4,
};

/// Runs af-prov with `args` (excluding the program name). Results go to `out`
/// unless -o is given; diagnostics go to `err` only.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace afprov::cli
