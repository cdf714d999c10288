#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace agi::detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

// Splits into whitespace-separated tokens, dropping `#` comments and blank lines.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream fields(raw);
    Line line{number, {}};
    std::string token;
    while (fields >> token) {
      line.tokens.push_back(std::move(token));
    }
    if (!line.tokens.empty()) {
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

} // namespace agi::detail
