#pragma once

#include "agi/angulation.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace agi {

/// Random (m+2)-angulation of the disc with `arc_count` diagonals and
/// arc_count*m + m + 2 points. Splits the polygon at a uniformly chosen
/// allowable diagonal, recursively. Same seed, same output.
Angulation random_disc_angulation(int m, std::size_t arc_count, std::uint64_t seed);

/// Diagonal list of a disc angulation in the `d.<i>` layout of the disc format.
struct DiscDiagonals {
  int m = 1;
  std::size_t points = 0;
  std::vector<Arc> arcs;
};

std::optional<DiscDiagonals> as_disc_diagonals(const Angulation& a);
Angulation from_disc_diagonals(const DiscDiagonals& d);

/// Removes arc `arc` when one of its sides is a face bounded by that arc alone,
/// together with the m points inside that side. nullopt when `arc` is no ear.
std::optional<DiscDiagonals> remove_ear(const DiscDiagonals& d, std::size_t arc);

/// Greedily removes ears while `still_fails` holds for the smaller instance.
DiscDiagonals shrink(DiscDiagonals d, const std::function<bool(const DiscDiagonals&)>& still_fails);

/// Splitmix64 step, used to derive independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

} // namespace agi
