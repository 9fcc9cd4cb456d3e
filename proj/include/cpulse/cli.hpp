#ifndef CPULSE_CLI_HPP
#define CPULSE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cpulse::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kUsage = 2,
  kUnsolvable = 3,
  kUnwritable = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpulse::cli

#endif  // CPULSE_CLI_HPP
