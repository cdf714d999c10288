#include "agi/threads.hpp"

#include "agi/error.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace agi {

std::string describe(const Thread& thread, const BoundQuiver& bq) {
  if (thread.trivial()) {
    return (thread.kind == ThreadKind::permitted ? "h_" : "p_") + bq.vertex(thread.start);
  }
  std::string out;
  for (ArrowIndex a : thread.arrows) {
    if (!out.empty()) {
      out += ' ';
    }
    out += bq.arrow(a).id;
  }
  return out;
}

namespace {

template <typename Accept>
std::optional<ArrowIndex> unique_neighbour(const std::vector<ArrowIndex>& candidates, Accept accept,
                                           const BoundQuiver& bq, ArrowIndex a, const char* what) {
  std::optional<ArrowIndex> found;
  for (ArrowIndex c : candidates) {
    if (!accept(c)) {
      continue;
    }
    if (found) {
      throw NotGentle("arrow " + bq.arrow(a).id + " has two " + what + ": " + bq.arrow(*found).id +
                      " and " + bq.arrow(c).id);
    }
    found = c;
  }
  return found;
}

void sort_threads(std::vector<Thread>& threads) {
  auto key = [](const Thread& t) {
    return std::make_tuple(t.start, t.trivial() ? 0 : 1, t.trivial() ? ArrowIndex{0} : t.arrows.front(),
                           t.arrows.size());
  };
  std::sort(threads.begin(), threads.end(),
            [&](const Thread& a, const Thread& b) { return key(a) < key(b); });
}

Thread make_path_thread(ThreadKind kind, std::vector<ArrowIndex> arrows, const BoundQuiver& bq) {
  Thread t;
  t.kind = kind;
  t.start = bq.arrow(arrows.front()).source;
  t.end = bq.arrow(arrows.back()).target;
  t.arrows = std::move(arrows);
  return t;
}

void add_trivial_threads(const BoundQuiver& bq, ThreadKind kind, std::vector<Thread>& out) {
  for (VertexIndex x = 0; x < bq.vertex_count(); ++x) {
    const auto& in = bq.incoming(x);
    const auto& outs = bq.outgoing(x);
    if (in.size() > 1 || outs.size() > 1) {
      continue;
    }
    if (!in.empty() && !outs.empty()) {
      const bool related = bq.has_relation(in.front(), outs.front());
      if (related != (kind == ThreadKind::forbidden)) {
        continue;
      }
    }
    Thread t;
    t.kind = kind;
    t.start = x;
    t.end = x;
    out.push_back(std::move(t));
  }
}

} // namespace

std::optional<ArrowIndex> permitted_successor(const BoundQuiver& bq, ArrowIndex a) {
  return unique_neighbour(
      bq.outgoing(bq.arrow(a).target), [&](ArrowIndex c) { return !bq.has_relation(a, c); }, bq, a,
      "permitted successors");
}

std::optional<ArrowIndex> permitted_predecessor(const BoundQuiver& bq, ArrowIndex a) {
  return unique_neighbour(
      bq.incoming(bq.arrow(a).source), [&](ArrowIndex c) { return !bq.has_relation(c, a); }, bq, a,
      "permitted predecessors");
}

std::optional<ArrowIndex> forbidden_successor(const BoundQuiver& bq, ArrowIndex a) {
  return unique_neighbour(
      bq.outgoing(bq.arrow(a).target), [&](ArrowIndex c) { return bq.has_relation(a, c); }, bq, a,
      "forbidden successors");
}

std::optional<ArrowIndex> forbidden_predecessor(const BoundQuiver& bq, ArrowIndex a) {
  return unique_neighbour(
      bq.incoming(bq.arrow(a).source), [&](ArrowIndex c) { return bq.has_relation(c, a); }, bq, a,
      "forbidden predecessors");
}

std::vector<Thread> permitted_threads(const BoundQuiver& bq) {
  std::vector<Thread> threads;
  std::vector<bool> covered(bq.arrow_count(), false);
  for (ArrowIndex a = 0; a < bq.arrow_count(); ++a) {
    if (permitted_predecessor(bq, a)) {
      continue;
    }
    std::vector<ArrowIndex> path{a};
    covered[a] = true;
    while (auto next = permitted_successor(bq, path.back())) {
      if (covered[*next]) {
        throw NotGentle("permitted path through " + bq.arrow(*next).id + " is not simple");
      }
      covered[*next] = true;
      path.push_back(*next);
    }
    threads.push_back(make_path_thread(ThreadKind::permitted, std::move(path), bq));
  }
  for (ArrowIndex a = 0; a < bq.arrow_count(); ++a) {
    if (!covered[a]) {
      throw NotGentle("arrow " + bq.arrow(a).id +
                      " lies on an oriented cycle without relations (no maximal permitted thread)");
    }
  }
  add_trivial_threads(bq, ThreadKind::permitted, threads);
  sort_threads(threads);
  return threads;
}

std::vector<FullRelationCycle> full_relation_cycles(const BoundQuiver& bq) {
  std::vector<FullRelationCycle> cycles;
  std::vector<bool> on_cycle(bq.arrow_count(), false);
  for (ArrowIndex a = 0; a < bq.arrow_count(); ++a) {
    if (on_cycle[a]) {
      continue;
    }
    std::vector<ArrowIndex> path{a};
    auto next = forbidden_successor(bq, a);
    while (next && *next != a && path.size() <= bq.arrow_count()) {
      if (std::find(path.begin(), path.end(), *next) != path.end()) {
        next.reset();
        break;
      }
      path.push_back(*next);
      next = forbidden_successor(bq, *next);
    }
    if (!next || *next != a) {
      continue;
    }
    for (ArrowIndex c : path) {
      on_cycle[c] = true;
    }
    // `a` is the smallest arrow of its cycle: smaller ones were already tried.
    cycles.push_back({std::move(path)});
  }
  return cycles;
}

std::vector<Thread> forbidden_threads(const BoundQuiver& bq) {
  std::vector<Thread> threads;
  for (ArrowIndex a = 0; a < bq.arrow_count(); ++a) {
    const auto before = forbidden_predecessor(bq, a);
    std::vector<ArrowIndex> path{a};
    while (auto next = forbidden_successor(bq, path.back())) {
      if (std::find(path.begin(), path.end(), *next) != path.end()) {
        break;
      }
      path.push_back(*next);
    }
    // A path may start at an arrow with a forbidden predecessor only when that
    // predecessor is its own last arrow: it then runs once around a cycle.
    const bool wraps = before && *before == path.back() && bq.has_relation(path.back(), path.front());
    if (before && !wraps) {
      continue;
    }
    Thread t = make_path_thread(ThreadKind::forbidden, std::move(path), bq);
    t.wraps_cycle = wraps;
    threads.push_back(std::move(t));
  }
  add_trivial_threads(bq, ThreadKind::forbidden, threads);
  sort_threads(threads);
  return threads;
}

SignAssignment assign_signs(const BoundQuiver& bq) {
  // Variable 2a is σ(a), 2a+1 is ε(a). Each constraint says two variables are
  // equal (flip = false) or opposite (flip = true).
  struct Link {
    std::size_t other;
    bool flip;
  };
  const std::size_t n = 2 * bq.arrow_count();
  std::vector<std::vector<Link>> links(n);
  auto constrain = [&](std::size_t x, std::size_t y, bool flip) {
    links[x].push_back({y, flip});
    links[y].push_back({x, flip});
  };
  for (VertexIndex v = 0; v < bq.vertex_count(); ++v) {
    const auto& outs = bq.outgoing(v);
    for (std::size_t i = 0; i < outs.size(); ++i) {
      for (std::size_t j = i + 1; j < outs.size(); ++j) {
        constrain(2 * outs[i], 2 * outs[j], true);
      }
    }
    const auto& ins = bq.incoming(v);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      for (std::size_t j = i + 1; j < ins.size(); ++j) {
        constrain(2 * ins[i] + 1, 2 * ins[j] + 1, true);
      }
    }
  }
  for (ArrowIndex a = 0; a < bq.arrow_count(); ++a) {
    for (ArrowIndex b : bq.outgoing(bq.arrow(a).target)) {
      constrain(2 * a + 1, 2 * b, !bq.has_relation(a, b));
    }
  }

  std::vector<int> value(n, 0);
  auto propagate = [&](std::size_t seed) {
    value[seed] = 1;
    std::deque<std::size_t> queue{seed};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (const auto& [y, flip] : links[x]) {
        const int want = flip ? -value[x] : value[x];
        if (value[y] == 0) {
          value[y] = want;
          queue.push_back(y);
        } else if (value[y] != want) {
          auto var = [&](std::size_t z) {
            return std::string(z % 2 == 0 ? "sigma(" : "epsilon(") + bq.arrow(z / 2).id + ")";
          };
          throw SignConflict("contradictory sign constraints between " + var(x) + " and " + var(y));
        }
      }
    }
  };
  for (std::size_t x = 0; x < n; x += 2) {
    if (value[x] == 0) {
      propagate(x);
    }
  }
  for (std::size_t x = 1; x < n; x += 2) {
    if (value[x] == 0) {
      propagate(x);
    }
  }

  SignAssignment signs;
  signs.sigma.resize(bq.arrow_count());
  signs.epsilon.resize(bq.arrow_count());
  for (ArrowIndex a = 0; a < bq.arrow_count(); ++a) {
    signs.sigma[a] = value[2 * a] > 0 ? Sign::positive : Sign::negative;
    signs.epsilon[a] = value[2 * a + 1] > 0 ? Sign::positive : Sign::negative;
  }
  return signs;
}

std::vector<std::string> sign_violations(const BoundQuiver& bq, const SignAssignment& signs) {
  std::vector<std::string> out;
  if (signs.sigma.size() != bq.arrow_count() || signs.epsilon.size() != bq.arrow_count()) {
    out.emplace_back("sign vectors do not match the arrow count");
    return out;
  }
  for (VertexIndex v = 0; v < bq.vertex_count(); ++v) {
    const auto& outs = bq.outgoing(v);
    for (std::size_t i = 0; i < outs.size(); ++i) {
      for (std::size_t j = i + 1; j < outs.size(); ++j) {
        if (signs.sigma[outs[i]] == signs.sigma[outs[j]]) {
          out.push_back("(1) sigma(" + bq.arrow(outs[i]).id + ") = sigma(" + bq.arrow(outs[j]).id + ")");
        }
      }
    }
    const auto& ins = bq.incoming(v);
    for (std::size_t i = 0; i < ins.size(); ++i) {
      for (std::size_t j = i + 1; j < ins.size(); ++j) {
        if (signs.epsilon[ins[i]] == signs.epsilon[ins[j]]) {
          out.push_back("(2) epsilon(" + bq.arrow(ins[i]).id + ") = epsilon(" + bq.arrow(ins[j]).id + ")");
        }
      }
    }
  }
  for (ArrowIndex a = 0; a < bq.arrow_count(); ++a) {
    for (ArrowIndex b : bq.outgoing(bq.arrow(a).target)) {
      const bool related = bq.has_relation(a, b);
      const Sign want = related ? signs.epsilon[a] : -signs.epsilon[a];
      if (signs.sigma[b] != want) {
        out.push_back(std::string(related ? "(4) " : "(3) ") + "sigma(" + bq.arrow(b).id +
                      ") vs epsilon(" + bq.arrow(a).id + ")");
      }
    }
  }
  return out;
}

SignAssignment negate_on(const BoundQuiver& bq, const SignAssignment& signs,
                         const std::vector<bool>& vertex_mask) {
  SignAssignment out = signs;
  for (ArrowIndex a = 0; a < bq.arrow_count(); ++a) {
    if (vertex_mask.at(bq.arrow(a).source)) {
      out.sigma[a] = -out.sigma[a];
      out.epsilon[a] = -out.epsilon[a];
    }
  }
  return out;
}

namespace {

Sign trivial_sigma(const Thread& t, const BoundQuiver& bq, const SignAssignment& signs) {
  const auto& outs = bq.outgoing(t.start);
  const auto& ins = bq.incoming(t.start);
  const bool permitted = t.kind == ThreadKind::permitted;
  if (!outs.empty()) {
    return -signs.sigma[outs.front()];
  }
  if (!ins.empty()) {
    return permitted ? signs.epsilon[ins.front()] : -signs.epsilon[ins.front()];
  }
  return permitted ? Sign::positive : Sign::negative;
}

} // namespace

Sign sigma_of(const Thread& t, const BoundQuiver& bq, const SignAssignment& signs) {
  if (!t.trivial()) {
    return signs.sigma[t.arrows.front()];
  }
  return trivial_sigma(t, bq, signs);
}

Sign epsilon_of(const Thread& t, const BoundQuiver& bq, const SignAssignment& signs) {
  if (!t.trivial()) {
    return signs.epsilon[t.arrows.back()];
  }
  const Sign s = trivial_sigma(t, bq, signs);
  return t.kind == ThreadKind::permitted ? -s : s;
}

} // namespace agi
