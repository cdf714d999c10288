#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace agi {

/// Exit codes of the `agi` tool.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int mismatch = 1;
inline constexpr int divergence = 2;
inline constexpr int usage = 64;
inline constexpr int invalid_input = 65;
inline constexpr int no_input = 66;
inline constexpr int internal = 70;
} // namespace exit_code

/// Runs one `agi` command line (without the program name). `-` as a file
/// argument reads `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace agi
