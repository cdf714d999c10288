#include "agi/ag_function.hpp"

#include "agi/error.hpp"

#include <sstream>

namespace agi {

void AgFunction::add(int n, int m, int count) {
  if (n < 0 || m < 0 || count < 0) {
    throw Error("AG pairs and multiplicities are natural numbers");
  }
  if (count == 0) {
    return;
  }
  counts_[{n, m}] += count;
}

int AgFunction::operator()(int n, int m) const {
  auto it = counts_.find({n, m});
  return it == counts_.end() ? 0 : it->second;
}

AgFunction& AgFunction::operator+=(const AgFunction& other) {
  for (const auto& [pair, count] : other.counts_) {
    counts_[pair] += count;
  }
  return *this;
}

int AgFunction::size() const {
  int total = 0;
  for (const auto& entry : counts_) {
    total += entry.second;
  }
  return total;
}

int AgFunction::sum_first() const {
  int total = 0;
  for (const auto& [pair, count] : counts_) {
    total += pair.first * count;
  }
  return total;
}

int AgFunction::sum_second() const {
  int total = 0;
  for (const auto& [pair, count] : counts_) {
    total += pair.second * count;
  }
  return total;
}

std::string AgFunction::to_string() const {
  std::ostringstream out;
  for (const auto& [pair, count] : counts_) {
    out << pair.first << ' ' << pair.second << ' ' << count << '\n';
  }
  return out.str();
}

AgFunction operator+(AgFunction lhs, const AgFunction& rhs) {
  lhs += rhs;
  return lhs;
}

AgFunction parse_ag_function(std::string_view text) {
  AgFunction result;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    int n = 0;
    int m = 0;
    int count = 0;
    if (!(fields >> n)) {
      continue;
    }
    if (!(fields >> m >> count) || n < 0 || m < 0 || count < 1) {
      throw ParseError(line_no, "expected `<n> <m> <count>`");
    }
    result.add(n, m, count);
  }
  return result;
}

std::string brief(const AgFunction& f) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [pair, count] : f.pairs()) {
    if (!first) {
      out << ", ";
    }
    first = false;
    out << '(' << pair.first << ',' << pair.second << "):" << count;
  }
  out << '}';
  return out.str();
}

} // namespace agi
