#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace besforge::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_usage = 2;

/// Runs one command line (args[0] is the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace besforge::cli
