#pragma once

#include "agi/ag_function.hpp"
#include "agi/angulation.hpp"

#include <cstddef>
#include <vector>

namespace agi {

/// Replaces every degenerate face t_1 B_1 ... t_r B_r by the r faces
/// t_i + (fresh boundary run head(t_i) -> tail(t_i) with m+1-k_i new points),
/// dropping the old runs B_i and their interior points. Boundary components
/// are then recomputed by corner walk and renamed c0, c1, ...
/// A non-degenerate input is returned unchanged.
Angulation remove_boundary_bridges(const Angulation& a);

/// t(0, m+2) plus one (#M_T, Σ(m - w)) per boundary component carrying arc
/// endpoints, all computed on the bridged angulation.
AgFunction ag_invariant_formula(const Angulation& a);

/// The same per-component sum without removing bridges. Wrong on degenerate
/// input; kept as a diagnostic.
AgFunction naive_per_component(const Angulation& a);

/// Merges the selected faces (each with exactly one boundary run) into one face
/// t_1 B_1' ... t_r B_r', in selection order. B_i' runs from head(t_i) to
/// tail(t_{i+1}) and carries weights[i] new points; the old runs and their
/// interior points are dropped. Needs r >= 2 and Σk_i + Σ(weights[i]+1) = m+2.
/// Throws InfeasibleParameters otherwise.
Angulation merge_inverse_bridge(const Angulation& a, const std::vector<std::size_t>& faces,
                                const std::vector<int>& weights);

/// Side-by-side union of two angulations with the same m. Arc, face and
/// component names get the prefixes `x` and `y`.
Angulation disjoint_union(const Angulation& x, const Angulation& y);

} // namespace agi
