#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wildsets {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitParse = 2,
  kExitRefusal = 3,
  kExitSearchExhausted = 4,
};

/// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wildsets
