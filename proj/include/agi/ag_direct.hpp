#pragma once

#include "agi/ag_function.hpp"
#include "agi/quiver.hpp"
#include "agi/threads.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace agi {

/// Threads, cycles and signs of one gentle bound quiver, with the pairing
/// maps φ (permitted -> forbidden) and ψ (forbidden -> permitted).
///
/// Holds a reference to the quiver; the quiver must outlive the context.
class PairingContext {
public:
  explicit PairingContext(const BoundQuiver& bq);
  PairingContext(const BoundQuiver& bq, SignAssignment signs);

  const BoundQuiver& quiver() const noexcept { return *quiver_; }
  const std::vector<Thread>& permitted() const noexcept { return permitted_; }
  const std::vector<Thread>& forbidden() const noexcept { return forbidden_; }
  const std::vector<FullRelationCycle>& cycles() const noexcept { return cycles_; }
  const SignAssignment& signs() const noexcept { return signs_; }

  /// Index into `forbidden()` of the thread ending at t(h) with ε(F) = -ε(h).
  std::size_t phi(std::size_t permitted_index) const;

  /// Index into `permitted()` of the thread starting at s(F) with σ(H) = -σ(F).
  std::size_t psi(std::size_t forbidden_index) const;

private:
  const BoundQuiver* quiver_;
  SignAssignment signs_;
  std::vector<Thread> permitted_;
  std::vector<Thread> forbidden_;
  std::vector<FullRelationCycle> cycles_;
  std::vector<Sign> permitted_sigma_, permitted_epsilon_;
  std::vector<Sign> forbidden_sigma_, forbidden_epsilon_;
};

struct WalkStep {
  std::size_t permitted = 0;
  std::size_t forbidden = 0;
};

/// One closed φ/ψ walk H_0 F_0 H_1 ... F_{n-1} (H_n = H_0) and its pair (n, m).
struct Walk {
  std::vector<WalkStep> steps;
  int n = 0;
  int m = 0;
};

struct AgTrace {
  std::vector<Walk> walks;
  std::vector<FullRelationCycle> cycles;
  AgFunction result;
};

/// Runs the walk from the least unvisited permitted thread until all are used,
/// then adds one (0, length) pair per full-relation cycle.
AgTrace trace_ag(const PairingContext& ctx);

AgFunction ag_invariant_direct(const BoundQuiver& bq);
AgFunction ag_invariant_direct(const BoundQuiver& bq, const SignAssignment& signs);

/// Tables `i | H_i | F_i` per walk, closed by the H_n row and the pair.
std::string format_trace(const AgTrace& trace, const PairingContext& ctx);

} // namespace agi
