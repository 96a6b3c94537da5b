#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmadf::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kYes = 0,
  kNo = 1,
  kUsage = 2,
  kRuntime = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmadf::cli
