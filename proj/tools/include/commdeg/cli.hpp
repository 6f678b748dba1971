#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace commdeg {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitCrossCheck = 2,
  kExitNumeric = 3,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace commdeg
