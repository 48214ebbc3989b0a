#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qf::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInternal = 1,
  kNegative = 2,  // negative verdict, unrepresentable or unsolvable
  kParse = 3,
  kLimit = 4,
};

/// Runs the command line; `args` includes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qf::cli
