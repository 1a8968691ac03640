#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fewembed::cli {

/// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitNoWitness = 1,
  kExitInputError = 2,
  kExitNegative = 3,
  kExitOutOfScope = 4,
};

/// Runs one command line (without the program name). JSON goes to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fewembed::cli
