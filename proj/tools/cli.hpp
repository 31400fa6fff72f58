#ifndef DIGROUP_TOOLS_CLI_HPP_
#define DIGROUP_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace digroup::cli {

  // Exit codes shared by every subcommand.
  inline constexpr int kSuccess       = 0;  // success, or the property holds
  inline constexpr int kPropertyFalse = 1;  // e.g. not isomorphic, not valid
  inline constexpr int kUsageError    = 2;  // bad arguments or unreadable input

  // Runs one command line. `args` excludes the program name.
  int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace digroup::cli

#endif  // DIGROUP_TOOLS_CLI_HPP_
