#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace roughcat {

/// Exit codes shared by every subcommand.
inline constexpr int exit_ok = 0;
inline constexpr int exit_io = 1;
inline constexpr int exit_failed = 2;

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Subcommands: validate, approximate, reduce, update,
/// guess, compose.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace roughcat
