#ifndef NUMSG_TOOLS_CLI_HPP
#define NUMSG_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace numsg::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kVerificationFailure = 2,
  kOverflowOrGuard = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numsg::cli

#endif  // NUMSG_TOOLS_CLI_HPP
