#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ubp::cli {

  inline constexpr int kExitSuccess      = 0;
  inline constexpr int kExitCheckFailed  = 1;
  inline constexpr int kExitUsageError   = 2;

  //! Environment variable overriding the enumeration ceiling.
  inline constexpr char const* kCeilingEnv = "UBP_CEILING";

  //! Runs the command line \p args (without the program name), writing
  //! results to \p out and diagnostics to \p err. Returns the exit status.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace ubp::cli
