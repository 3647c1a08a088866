#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cgblock {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitVerificationFailed = 3,
  kExitSolverIncomplete = 4,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, char** argv);

}  // namespace cgblock
