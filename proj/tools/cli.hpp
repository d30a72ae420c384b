#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gpm::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_internal_error = 2;

/// Runs one invocation. `args` excludes the program name. "-" as a file
/// argument reads from `in`.
int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err);

} // namespace gpm::cli
