#include "agi/error.hpp"

#include <utility>

namespace agi {

namespace {

std::string join_problems(const std::vector<std::string>& problems) {
  if (problems.empty()) {
    return "invalid input";
  }
  std::string out = problems.front();
  for (std::size_t i = 1; i < problems.size(); ++i) {
    out += "; ";
    out += problems[i];
  }
  return out;
}

} // namespace

ValidationError::ValidationError(std::vector<std::string> problems)
    : Error(join_problems(problems)), problems_(std::move(problems)) {}

} // namespace agi
