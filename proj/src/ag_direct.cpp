#include "agi/ag_direct.hpp"

#include "agi/error.hpp"

#include <sstream>

namespace agi {

PairingContext::PairingContext(const BoundQuiver& bq) : PairingContext(bq, assign_signs(bq)) {}

PairingContext::PairingContext(const BoundQuiver& bq, SignAssignment signs)
    : quiver_(&bq), signs_(std::move(signs)), permitted_(permitted_threads(bq)),
      forbidden_(forbidden_threads(bq)), cycles_(full_relation_cycles(bq)) {
  for (const auto& t : permitted_) {
    permitted_sigma_.push_back(sigma_of(t, bq, signs_));
    permitted_epsilon_.push_back(epsilon_of(t, bq, signs_));
  }
  for (const auto& t : forbidden_) {
    forbidden_sigma_.push_back(sigma_of(t, bq, signs_));
    forbidden_epsilon_.push_back(epsilon_of(t, bq, signs_));
  }
}

namespace {

bool isolated(const BoundQuiver& bq, VertexIndex v) {
  return bq.outgoing(v).empty() && bq.incoming(v).empty();
}

} // namespace

std::size_t PairingContext::phi(std::size_t permitted_index) const {
  const auto& h = permitted_.at(permitted_index);
  const auto& bq = *quiver_;
  std::size_t found = forbidden_.size();
  std::size_t hits = 0;
  for (std::size_t i = 0; i < forbidden_.size(); ++i) {
    const auto& f = forbidden_[i];
    if (f.wraps_cycle || f.end != h.end) {
      continue;
    }
    const bool match = isolated(bq, h.end) ? f.trivial()
                                           : forbidden_epsilon_[i] == -permitted_epsilon_[permitted_index];
    if (match) {
      found = i;
      ++hits;
    }
  }
  if (hits != 1) {
    throw PairingFailure("phi(" + describe(h, bq) + ") has " + std::to_string(hits) + " candidates");
  }
  return found;
}

std::size_t PairingContext::psi(std::size_t forbidden_index) const {
  const auto& f = forbidden_.at(forbidden_index);
  const auto& bq = *quiver_;
  if (f.wraps_cycle) {
    throw PairingFailure("psi is undefined on the cycle thread " + describe(f, bq));
  }
  std::size_t found = permitted_.size();
  std::size_t hits = 0;
  for (std::size_t i = 0; i < permitted_.size(); ++i) {
    const auto& h = permitted_[i];
    if (h.start != f.start) {
      continue;
    }
    const bool match = isolated(bq, f.start) ? h.trivial()
                                             : permitted_sigma_[i] == -forbidden_sigma_[forbidden_index];
    if (match) {
      found = i;
      ++hits;
    }
  }
  if (hits != 1) {
    throw PairingFailure("psi(" + describe(f, bq) + ") has " + std::to_string(hits) + " candidates");
  }
  return found;
}

AgTrace trace_ag(const PairingContext& ctx) {
  AgTrace trace;
  const auto& permitted = ctx.permitted();
  const auto& forbidden = ctx.forbidden();
  std::vector<bool> visited(permitted.size(), false);
  for (std::size_t start = 0; start < permitted.size(); ++start) {
    if (visited[start]) {
      continue;
    }
    Walk walk;
    std::size_t h = start;
    do {
      if (visited[h]) {
        throw PairingFailure("walk from " + describe(permitted[start], ctx.quiver()) +
                             " re-enters another walk at " + describe(permitted[h], ctx.quiver()));
      }
      visited[h] = true;
      const std::size_t f = ctx.phi(h);
      walk.steps.push_back({h, f});
      walk.m += forbidden[f].length();
      h = ctx.psi(f);
    } while (h != start);
    walk.n = static_cast<int>(walk.steps.size());
    trace.result.add(walk.n, walk.m);
    trace.walks.push_back(std::move(walk));
  }
  trace.cycles = ctx.cycles();
  for (const auto& cycle : trace.cycles) {
    trace.result.add(0, static_cast<int>(cycle.arrows.size()));
  }
  return trace;
}

AgFunction ag_invariant_direct(const BoundQuiver& bq) {
  return trace_ag(PairingContext(bq)).result;
}

AgFunction ag_invariant_direct(const BoundQuiver& bq, const SignAssignment& signs) {
  return trace_ag(PairingContext(bq, signs)).result;
}

std::string format_trace(const AgTrace& trace, const PairingContext& ctx) {
  const auto& bq = ctx.quiver();
  std::ostringstream out;
  for (std::size_t w = 0; w < trace.walks.size(); ++w) {
    const auto& walk = trace.walks[w];
    out << "walk " << w + 1 << '\n';
    out << "i | H_i | F_i\n";
    for (std::size_t i = 0; i < walk.steps.size(); ++i) {
      out << i << " | " << describe(ctx.permitted()[walk.steps[i].permitted], bq) << " | "
          << describe(ctx.forbidden()[walk.steps[i].forbidden], bq) << '\n';
    }
    out << walk.steps.size() << " | " << describe(ctx.permitted()[walk.steps.front().permitted], bq)
        << " |\n";
    out << "pair (" << walk.n << ',' << walk.m << ")\n";
  }
  for (const auto& cycle : trace.cycles) {
    out << "cycle";
    for (ArrowIndex a : cycle.arrows) {
      out << ' ' << bq.arrow(a).id;
    }
    out << "\npair (0," << cycle.arrows.size() << ")\n";
  }
  return out.str();
}

} // namespace agi
