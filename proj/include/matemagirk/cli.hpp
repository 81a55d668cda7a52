#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace matemagirk
{
  // Exit codes.
  //
  inline constexpr int exit_ok = 0;
  inline constexpr int exit_discrepancy = 1; // verify only
  inline constexpr int exit_usage = 2;       // usage or parse error
  inline constexpr int exit_internal = 3;    // solver error

  // Runs the command line (without the program name) against the given
  // streams and returns the exit code.
  //
  int
  run (const std::vector<std::string>& args,
       std::istream& in,
       std::ostream& out,
       std::ostream& err);

  // Line-oriented feast puzzle session: dinner, tourists, pouch, eggs or
  // wineskins. Identical input yields identical output.
  //
  int
  puzzle_repl (std::string_view name,
               std::istream& in,
               std::ostream& out,
               std::ostream& err);
}
