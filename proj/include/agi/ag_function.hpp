#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace agi {

/// Finite multiset of ordered pairs (n, m) of naturals: the AG-invariant.
///
/// Equality is multiset equality. `to_string` writes one `<n> <m> <count>`
/// line per distinct pair, sorted lexicographically.
class AgFunction {
public:
  using Pair = std::pair<int, int>;

  AgFunction() = default;

  void add(int n, int m, int count = 1);

  /// Multiplicity of (n, m); zero when absent.
  int operator()(int n, int m) const;

  AgFunction& operator+=(const AgFunction& other);

  const std::map<Pair, int>& pairs() const noexcept { return counts_; }
  bool empty() const noexcept { return counts_.empty(); }

  /// Number of pairs counted with multiplicity.
  int size() const;
  int sum_first() const;
  int sum_second() const;

  std::string to_string() const;

  bool operator==(const AgFunction&) const = default;

private:
  std::map<Pair, int> counts_;
};

AgFunction operator+(AgFunction lhs, const AgFunction& rhs);

/// Parses the `<n> <m> <count>` line format written by `to_string`.
AgFunction parse_ag_function(std::string_view text);

/// Compact one-line rendering, e.g. `{(1,0):1, (4,5):1}`.
std::string brief(const AgFunction& f);

} // namespace agi
