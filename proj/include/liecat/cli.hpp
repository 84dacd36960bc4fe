#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liecat::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kValidationError = 2,
};

/// Runs one command (`args` excludes the program name) and writes a
/// `key=value` report, one pair per line. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace liecat::cli
