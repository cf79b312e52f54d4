#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace algequiv::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNotEquivalent = 1,
  kOutOfScope = 2,
  kInputError = 3,
  kResourceCap = 4,
  kInternalError = 5,
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algequiv::cli
