#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gsf {

  // Exit codes of the command line tool.
  inline constexpr int exit_ok                = 0;
  inline constexpr int exit_expect_mismatch   = 1;
  inline constexpr int exit_usage             = 2;
  inline constexpr int exit_invalid_structure = 3;

  /// Runs one command. `args` excludes the program name.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace gsf
