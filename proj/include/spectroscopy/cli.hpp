#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectroscopy::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_notion_fails = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_position_limit = 3;

/// Runs the command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectroscopy::cli
