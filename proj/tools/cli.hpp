#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace snlab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kViolation = 2,
  kCapacity = 3,
  kParse = 4,
};

// Runs one command line (args[0] is the program name) and returns the
// process exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace snlab::cli
