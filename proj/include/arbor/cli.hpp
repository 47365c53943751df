#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arbor::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kCapExceeded = 2,
  kVerificationFailed = 3,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arbor::cli
