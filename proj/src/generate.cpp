#include "agi/generate.hpp"

#include "agi/angulation_io.hpp"
#include "agi/error.hpp"

#include <algorithm>

namespace agi {

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

// Places `arcs` diagonals inside the polygon spanned by points[lo..hi].
void split(const std::vector<PointIndex>& points, std::size_t arcs, std::size_t m, std::mt19937_64& rng,
           std::vector<std::pair<PointIndex, PointIndex>>& out) {
  if (arcs == 0) {
    return;
  }
  const std::size_t n = points.size();
  // Diagonal (i, j), i < j, cuts off points i..j: j-i+1 = k*m + m + 2 for 0 <= k < arcs.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> choices;
  for (std::size_t k = 0; k < arcs; ++k) {
    const std::size_t size = k * m + m + 2;
    for (std::size_t i = 0; i + size - 1 < n; ++i) {
      const std::size_t j = i + size - 1;
      if (i == 0 && j == n - 1) {
        continue;
      }
      choices.emplace_back(i, j, k);
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  const auto [i, j, k] = choices[pick(rng)];
  out.emplace_back(points[i], points[j]);
  std::vector<PointIndex> inside(points.begin() + static_cast<std::ptrdiff_t>(i),
                                 points.begin() + static_cast<std::ptrdiff_t>(j) + 1);
  std::vector<PointIndex> outside(points.begin(), points.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  outside.insert(outside.end(), points.begin() + static_cast<std::ptrdiff_t>(j), points.end());
  split(inside, k, m, rng, out);
  split(outside, arcs - 1 - k, m, rng, out);
}

} // namespace

Angulation random_disc_angulation(int m, std::size_t arc_count, std::uint64_t seed) {
  if (m < 1) {
    throw InfeasibleParameters("m must be a positive integer");
  }
  if (arc_count > 100000) {
    throw InfeasibleParameters("too many arcs");
  }
  const std::size_t mm = static_cast<std::size_t>(m);
  const std::size_t n = arc_count * mm + mm + 2;
  std::vector<PointIndex> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    points[i] = i;
  }
  std::mt19937_64 rng(seed);
  std::vector<std::pair<PointIndex, PointIndex>> cut;
  split(points, arc_count, mm, rng, cut);
  DiscDiagonals d{m, n, {}};
  for (std::size_t i = 0; i < cut.size(); ++i) {
    d.arcs.push_back({"t" + std::to_string(i + 1), cut[i].first, cut[i].second});
  }
  return from_disc_diagonals(d);
}

std::optional<DiscDiagonals> as_disc_diagonals(const Angulation& a) {
  const auto& s = a.surface();
  if (s.components.size() != 1 || !is_disc(s)) {
    return std::nullopt;
  }
  const auto& points = s.components.front().points;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] != i) {
      return std::nullopt;
    }
  }
  return DiscDiagonals{a.m(), points.size(), s.arcs};
}

Angulation from_disc_diagonals(const DiscDiagonals& d) {
  return Angulation(d.m, disc_surface(d.points, d.arcs));
}

std::optional<DiscDiagonals> remove_ear(const DiscDiagonals& d, std::size_t arc) {
  const auto& x = d.arcs.at(arc);
  const std::size_t n = d.points;
  const std::size_t mm = static_cast<std::size_t>(d.m);
  auto offset = [n](PointIndex from, PointIndex to) { return (to + n - from) % n; };
  // Try both sides: the ccw stretch from `a` to `b`.
  for (auto [a, b] : {std::pair{x.tail, x.head}, std::pair{x.head, x.tail}}) {
    if (offset(a, b) != mm + 1) {
      continue;
    }
    const bool empty = std::none_of(d.arcs.begin(), d.arcs.end(), [&](const Arc& other) {
      const auto in_side = [&](PointIndex p) { return offset(a, p) > 0 && offset(a, p) < mm + 1; };
      return in_side(other.tail) || in_side(other.head);
    });
    if (!empty) {
      continue;
    }
    // Drop the m points strictly between a and b, keeping the others in order.
    std::vector<PointIndex> index(n, n);
    PointIndex next = 0;
    for (PointIndex p = 0; p < n; ++p) {
      if (offset(a, p) > 0 && offset(a, p) < mm + 1) {
        continue;
      }
      index[p] = next++;
    }
    DiscDiagonals out{d.m, n - mm, {}};
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
      if (i != arc) {
        out.arcs.push_back({d.arcs[i].id, index[d.arcs[i].tail], index[d.arcs[i].head]});
      }
    }
    return out;
  }
  return std::nullopt;
}

DiscDiagonals shrink(DiscDiagonals d, const std::function<bool(const DiscDiagonals&)>& still_fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
      auto smaller = remove_ear(d, i);
      if (smaller && still_fails(*smaller)) {
        d = std::move(*smaller);
        progress = true;
        break;
      }
    }
  }
  return d;
}

} // namespace agi
