#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polewarp {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  ///< validation failure, infeasible fit, I/O or parse error
inline constexpr int kExitUsage = 2;

/// Runs the `polewarp` command line. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polewarp
