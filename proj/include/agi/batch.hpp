#pragma once

#include "agi/ag_function.hpp"
#include "agi/angulation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace agi {

enum class Agreement { match, mismatch, documented };

/// Formula path against direct path on one angulation.
///
/// `documented` is the isolated-vertex divergence: each isolated quiver vertex
/// contributes (1,0) to the direct value and (2,0) to the formula, and nothing
/// else differs.
struct Verification {
  AgFunction formula;
  AgFunction direct;
  std::size_t isolated = 0;
  Agreement agreement = Agreement::match;
};

Verification verify_angulation(const Angulation& a);

/// True when `formula` = `direct` - k(1,0) + k(2,0).
bool is_documented_divergence(const AgFunction& formula, const AgFunction& direct, std::size_t k);

/// Outcome of the invariant checks on one angulation.
struct CheckOutcome {
  std::vector<std::string> failures;
  std::size_t isolated = 0;  // isolated quiver vertices; bijection checks are skipped when > 0
};

/// Oracle equivalence, thread/segment bijections, ℓ(F) = m - w, pair sums,
/// gentleness, sign validity and per-component sign-flip invariance.
CheckOutcome check_angulation(const Angulation& a);

struct Mutation {
  Angulation before;
  Angulation after;
  std::string description;
};

/// Random inverse-bridge mutation of `base` (optionally joined with a second
/// random disc first). nullopt when no merge is feasible, e.g. m = 1.
std::optional<Mutation> derive_mutation(const Angulation& base, std::uint64_t seed);

/// Quiver preserved literally, formula unchanged, bridged output
/// non-degenerate and bridging idempotent.
std::vector<std::string> check_mutation(const Mutation& mutation);

struct InstanceSpec {
  std::size_t index = 0;
  int m = 1;
  std::size_t arcs = 0;
  std::uint64_t seed = 0;
  bool mutate = false;
};

enum class Outcome { passed, documented, skipped, failed };

std::string_view name(Outcome outcome);

struct InstanceResult {
  InstanceSpec spec;
  Outcome outcome = Outcome::passed;
  std::vector<std::string> failures;
  std::string reproducer;  // filled in by `fuzz` for failures
};

InstanceResult check_instance(const InstanceSpec& spec);

/// Reference runner: one instance after the other.
std::vector<InstanceResult> run_batch_serial(const std::vector<InstanceSpec>& specs);

/// Same results as `run_batch_serial`, instances spread over OpenMP threads.
std::vector<InstanceResult> run_batch_parallel(const std::vector<InstanceSpec>& specs);

struct FuzzOptions {
  std::size_t count = 500;
  std::size_t mutations = 100;
  int m_min = 1;
  int m_max = 4;
  std::size_t arcs_max = 12;
  std::uint64_t seed = 7;
  bool parallel = true;
};

/// `count` plain instances followed by `mutations` mutated ones (m >= 2),
/// parameters drawn from per-index seeds.
std::vector<InstanceSpec> make_specs(const FuzzOptions& options);

struct FuzzReport {
  std::vector<InstanceResult> results;  // sorted by index
  std::size_t passed = 0;
  std::size_t documented = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
};

/// Runs the specs and shrinks each failure to a minimal disc reproducer.
FuzzReport fuzz(const FuzzOptions& options);

std::string format_report(const FuzzReport& report);

} // namespace agi
