#pragma once

#include "agi/quiver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace agi {

enum class ThreadKind : std::uint8_t { permitted, forbidden };

/// A permitted or forbidden thread.
///
/// Trivial threads have an empty arrow list and sit at `start == end`.
/// `wraps_cycle` marks the forbidden threads that run once around a
/// full-relation cycle; those take no part in the pairing walk.
struct Thread {
  ThreadKind kind = ThreadKind::permitted;
  std::vector<ArrowIndex> arrows;
  VertexIndex start = 0;
  VertexIndex end = 0;
  bool wraps_cycle = false;

  bool trivial() const noexcept { return arrows.empty(); }
  int length() const noexcept { return static_cast<int>(arrows.size()); }

  bool operator==(const Thread&) const = default;
};

/// Renders `a2 a1 a3 a4`, or `h_<v>` / `p_<v>` for trivial threads.
std::string describe(const Thread& thread, const BoundQuiver& bq);

/// The unique arrow continuing `a` without (resp. with) a relation. Throws
/// NotGentle when the continuation is ambiguous.
std::optional<ArrowIndex> permitted_successor(const BoundQuiver& bq, ArrowIndex a);
std::optional<ArrowIndex> permitted_predecessor(const BoundQuiver& bq, ArrowIndex a);
std::optional<ArrowIndex> forbidden_successor(const BoundQuiver& bq, ArrowIndex a);
std::optional<ArrowIndex> forbidden_predecessor(const BoundQuiver& bq, ArrowIndex a);

/// All permitted threads, sorted by (start vertex, trivial first, first arrow, length).
std::vector<Thread> permitted_threads(const BoundQuiver& bq);

/// All forbidden threads (including those wrapping full-relation cycles), same order.
std::vector<Thread> forbidden_threads(const BoundQuiver& bq);

/// Oriented cycle in which every pair of consecutive arrows is a relation.
/// Stored in the rotation starting at its smallest arrow index.
struct FullRelationCycle {
  std::vector<ArrowIndex> arrows;

  bool operator==(const FullRelationCycle&) const = default;
};

std::vector<FullRelationCycle> full_relation_cycles(const BoundQuiver& bq);

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// The functions σ, ε on arrows.
///
/// Constraints, for distinct arrows:
///   (1) equal source  -> opposite σ
///   (2) equal target  -> opposite ε
///   (3) αβ composable, αβ ∉ I -> σ(β) = -ε(α)
///   (4) αβ ∈ I               -> σ(β) = +ε(α)
struct SignAssignment {
  std::vector<Sign> sigma;
  std::vector<Sign> epsilon;

  bool operator==(const SignAssignment&) const = default;
};

/// Deterministic solution of (1)-(4): σ of each arrow in arrow order is seeded
/// with +1 when still free and propagated, then leftover ε are set to +1.
/// Throws SignConflict when the constraints are contradictory.
SignAssignment assign_signs(const BoundQuiver& bq);

/// Every constraint of (1)-(4) that `signs` breaks, as readable text.
std::vector<std::string> sign_violations(const BoundQuiver& bq, const SignAssignment& signs);

/// Copy of `signs` with σ and ε negated on every arrow of the given vertex set's
/// component (arrows whose source is flagged).
SignAssignment negate_on(const BoundQuiver& bq, const SignAssignment& signs,
                         const std::vector<bool>& vertex_mask);

Sign sigma_of(const Thread& t, const BoundQuiver& bq, const SignAssignment& signs);
Sign epsilon_of(const Thread& t, const BoundQuiver& bq, const SignAssignment& signs);

} // namespace agi
