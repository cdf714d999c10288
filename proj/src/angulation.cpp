#include "agi/angulation.hpp"

#include "agi/error.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace agi {

PointIndex tail(const Edge& e, const MarkedSurface& s) {
  if (const auto* t = std::get_if<ArcTraversal>(&e)) {
    const auto& arc = s.arcs.at(t->arc);
    return t->reversed ? arc.head : arc.tail;
  }
  return std::get<BoundaryEdge>(e).tail;
}

PointIndex head(const Edge& e, const MarkedSurface& s) {
  if (const auto* t = std::get_if<ArcTraversal>(&e)) {
    const auto& arc = s.arcs.at(t->arc);
    return t->reversed ? arc.tail : arc.head;
  }
  return std::get<BoundaryEdge>(e).head;
}

namespace {

std::string edge_name(const Edge& e, const MarkedSurface& s) {
  if (const auto* t = std::get_if<ArcTraversal>(&e)) {
    return "arc " + s.arcs.at(t->arc).id + (t->reversed ? "-" : "+");
  }
  const auto& b = std::get<BoundaryEdge>(e);
  return "boundary edge " + s.point_labels.at(b.tail) + "->" + s.point_labels.at(b.head);
}

// Edges and endpoints refer to existing points/arcs.
bool references_valid(const Edge& e, const MarkedSurface& s) {
  if (const auto* t = std::get_if<ArcTraversal>(&e)) {
    return t->arc < s.arcs.size();
  }
  const auto& b = std::get<BoundaryEdge>(e);
  return b.tail < s.point_count() && b.head < s.point_count();
}

std::vector<Run> runs_of(const Face& f, bool boundary) {
  std::vector<Run> runs;
  const std::size_t n = f.walk.size();
  auto matches = [&](std::size_t i) { return is_boundary(f.walk[i % n]) == boundary; };
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    count += matches(i) ? 1 : 0;
  }
  if (count == 0) {
    return runs;
  }
  if (count == n) {
    runs.push_back({0, n});
    return runs;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matches(i) && !matches(i + n - 1)) {
      std::size_t len = 0;
      while (matches(i + len)) {
        ++len;
      }
      runs.push_back({i, len});
    }
  }
  return runs;
}

} // namespace

std::vector<Run> boundary_runs(const Face& f) { return runs_of(f, true); }
std::vector<Run> arc_runs(const Face& f) { return runs_of(f, false); }

EdgeLocator::EdgeLocator(const MarkedSurface& s)
    : arc_slots_(2 * s.arcs.size()), boundary_slots_(s.point_count()),
      boundary_present_(s.point_count(), false) {
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    const auto& walk = s.faces[f].walk;
    for (std::size_t j = 0; j < walk.size(); ++j) {
      if (const auto* t = std::get_if<ArcTraversal>(&walk[j])) {
        arc_slots_.at(2 * t->arc + (t->reversed ? 1 : 0)) = {f, j};
      } else {
        const auto p = std::get<BoundaryEdge>(walk[j]).tail;
        boundary_slots_.at(p) = {f, j};
        boundary_present_.at(p) = true;
      }
    }
  }
}

std::vector<std::string> structural_problems(const MarkedSurface& s) {
  std::vector<std::string> problems;
  const std::size_t n_points = s.point_count();

  // Components partition the points; `next` is the boundary successor.
  std::vector<int> seen(n_points, 0);
  std::vector<PointIndex> next(n_points, n_points);
  std::vector<PointIndex> prev(n_points, n_points);
  std::set<std::string> names;
  for (const auto& c : s.components) {
    if (!names.insert(c.name).second) {
      problems.push_back("duplicate boundary component " + c.name);
    }
    if (c.points.empty()) {
      problems.push_back("boundary component " + c.name + " has no marked points");
      continue;
    }
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      const auto p = c.points[i];
      if (p >= n_points) {
        problems.push_back("boundary component " + c.name + " refers to an unknown point");
        continue;
      }
      ++seen[p];
      next[p] = c.points[(i + 1) % c.points.size()];
      prev[next[p]] = p;
    }
  }
  for (PointIndex p = 0; p < n_points; ++p) {
    if (seen[p] != 1) {
      problems.push_back("point " + s.point_labels[p] + " lies on " + std::to_string(seen[p]) +
                         " boundary components");
    }
  }

  std::set<std::string> arc_ids;
  for (const auto& arc : s.arcs) {
    if (!arc_ids.insert(arc.id).second) {
      problems.push_back("duplicate arc " + arc.id);
    }
    if (arc.tail >= n_points || arc.head >= n_points) {
      problems.push_back("arc " + arc.id + " has an unknown endpoint");
    }
  }
  if (!problems.empty()) {
    return problems;
  }

  std::vector<int> arc_uses(2 * s.arcs.size(), 0);
  std::vector<int> boundary_uses(n_points, 0);
  std::set<std::string> face_ids;
  for (const auto& face : s.faces) {
    if (!face_ids.insert(face.id).second) {
      problems.push_back("duplicate face " + face.id);
    }
    if (face.walk.empty()) {
      problems.push_back("face " + face.id + " is empty");
      continue;
    }
    bool refs_ok = true;
    for (const auto& e : face.walk) {
      if (!references_valid(e, s)) {
        problems.push_back("face " + face.id + " refers to an unknown arc or point");
        refs_ok = false;
      }
    }
    if (!refs_ok) {
      continue;
    }
    for (std::size_t j = 0; j < face.walk.size(); ++j) {
      const auto& e = face.walk[j];
      const auto& following = face.walk[(j + 1) % face.walk.size()];
      if (head(e, s) != tail(following, s)) {
        problems.push_back("face " + face.id + ": " + edge_name(e, s) + " is not followed by an edge at " +
                           s.point_labels[head(e, s)]);
      }
      if (const auto* t = std::get_if<ArcTraversal>(&e)) {
        ++arc_uses[2 * t->arc + (t->reversed ? 1 : 0)];
      } else {
        const auto& b = std::get<BoundaryEdge>(e);
        if (next[b.tail] != b.head) {
          problems.push_back("face " + face.id + ": " + edge_name(e, s) +
                             " is not a counter-clockwise boundary edge");
        }
        ++boundary_uses[b.tail];
      }
    }
  }
  for (std::size_t a = 0; a < s.arcs.size(); ++a) {
    for (int dir = 0; dir < 2; ++dir) {
      const int uses = arc_uses[2 * a + dir];
      if (uses != 1) {
        problems.push_back("arc " + s.arcs[a].id + (dir == 0 ? "+" : "-") + " occurs in " +
                           std::to_string(uses) + " face positions");
      }
    }
  }
  for (PointIndex p = 0; p < n_points; ++p) {
    if (boundary_uses[p] != 1) {
      problems.push_back("boundary edge from " + s.point_labels[p] + " occurs in " +
                         std::to_string(boundary_uses[p]) + " faces");
    }
  }
  if (!problems.empty()) {
    return problems;
  }

  // Corners at each point must form one fan from the incoming boundary edge to
  // the outgoing one.
  std::vector<std::size_t> corners_at(n_points, 0);
  for (const auto& face : s.faces) {
    for (const auto& e : face.walk) {
      ++corners_at[head(e, s)];
    }
  }
  const EdgeLocator locate(s);
  for (PointIndex p = 0; p < n_points; ++p) {
    auto slot = locate.of_boundary(prev[p]);
    std::size_t visited = 1;
    while (visited <= corners_at[p]) {
      const auto& walk = s.faces[slot.face].walk;
      const auto& out = walk[(slot.position + 1) % walk.size()];
      const auto* t = std::get_if<ArcTraversal>(&out);
      if (t == nullptr) {
        break;
      }
      slot = locate.of_arc(t->arc, !t->reversed);
      ++visited;
    }
    if (visited != corners_at[p]) {
      problems.push_back("corners at point " + s.point_labels[p] + " do not form a single fan");
    }
  }
  return problems;
}

long euler_characteristic(const MarkedSurface& s) {
  // V = #points and #boundary edges = #points, so V - E + F = F - #arcs.
  return static_cast<long>(s.faces.size()) - static_cast<long>(s.arcs.size());
}

bool is_disc(const MarkedSurface& s) {
  return s.components.size() == 1 && euler_characteristic(s) == 1;
}

std::vector<std::string> angulation_problems(int m, const MarkedSurface& surface) {
  std::vector<std::string> problems;
  if (m < 1) {
    problems.push_back("m must be a positive integer");
    return problems;
  }
  problems = structural_problems(surface);
  const std::size_t size = static_cast<std::size_t>(m) + 2;
  for (const auto& face : surface.faces) {
    if (face.walk.size() != size) {
      problems.push_back("face " + face.id + " has " + std::to_string(face.walk.size()) +
                         " edges, expected " + std::to_string(size));
    }
  }
  if (problems.empty() && is_disc(surface) &&
      surface.point_count() % static_cast<std::size_t>(m) != 2 % static_cast<std::size_t>(m)) {
    problems.push_back("a disc with " + std::to_string(surface.point_count()) +
                       " marked points admits no (m+2)-angulation");
  }
  return problems;
}

Angulation::Angulation(int m, MarkedSurface surface) : m_(m), surface_(std::move(surface)) {
  auto problems = angulation_problems(m_, surface_);
  if (!problems.empty()) {
    throw ValidationError(std::move(problems));
  }
}

namespace {

std::vector<bool> arc_endpoint_mask(const MarkedSurface& s) {
  std::vector<bool> mask(s.point_count(), false);
  for (const auto& arc : s.arcs) {
    mask[arc.tail] = true;
    mask[arc.head] = true;
  }
  return mask;
}

} // namespace

std::vector<std::string> warnings(const MarkedSurface& s) {
  std::vector<std::string> out;
  if (s.arcs.empty()) {
    out.emplace_back("no arcs: the associated algebra is empty");
  }
  const auto mask = arc_endpoint_mask(s);
  for (const auto& c : s.components) {
    if (std::none_of(c.points.begin(), c.points.end(), [&](PointIndex p) { return mask[p]; })) {
      out.push_back("boundary component " + c.name + " carries no arc endpoint and contributes nothing");
    }
  }
  return out;
}

std::vector<std::vector<PointIndex>> marked_points_on_arcs(const MarkedSurface& s) {
  const auto mask = arc_endpoint_mask(s);
  std::vector<std::vector<PointIndex>> out;
  for (const auto& c : s.components) {
    auto& points = out.emplace_back();
    for (PointIndex p : c.points) {
      if (mask[p]) {
        points.push_back(p);
      }
    }
  }
  return out;
}

std::vector<BoundarySegment> boundary_segments(const MarkedSurface& s) {
  const auto mask = arc_endpoint_mask(s);
  const EdgeLocator locate(s);
  std::vector<BoundarySegment> out;
  for (std::size_t c = 0; c < s.components.size(); ++c) {
    const auto& points = s.components[c].points;
    const std::size_t n = points.size();
    std::vector<std::size_t> marks;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[points[i]]) {
        marks.push_back(i);
      }
    }
    for (std::size_t k = 0; k < marks.size(); ++k) {
      const std::size_t from = marks[k];
      const std::size_t to = marks[(k + 1) % marks.size()];
      const std::size_t gap = marks.size() == 1 ? n : (to + n - from) % n;
      out.push_back({c, points[from], points[to], static_cast<int>(gap) - 1,
                     locate.of_boundary(points[from]).face});
    }
  }
  return out;
}

std::size_t internal_faces(const MarkedSurface& s) {
  return static_cast<std::size_t>(std::count_if(s.faces.begin(), s.faces.end(), [](const Face& f) {
    return std::none_of(f.walk.begin(), f.walk.end(), [](const Edge& e) { return is_boundary(e); });
  }));
}

std::vector<std::size_t> degenerate_faces(const MarkedSurface& s) {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    if (boundary_runs(s.faces[f]).size() >= 2) {
      out.push_back(f);
    }
  }
  return out;
}

bool is_degenerate(const MarkedSurface& s) { return !degenerate_faces(s).empty(); }

std::vector<std::vector<PointIndex>> boundary_components_by_walk(const MarkedSurface& s) {
  const EdgeLocator locate(s);
  std::vector<bool> visited(s.point_count(), false);
  std::vector<std::vector<PointIndex>> circles;
  for (PointIndex start = 0; start < s.point_count(); ++start) {
    if (visited[start] || !locate.has_boundary(start)) {
      continue;
    }
    auto& circle = circles.emplace_back();
    PointIndex p = start;
    do {
      visited[p] = true;
      circle.push_back(p);
      // Hop from the edge leaving p around its head until a boundary edge leaves.
      auto slot = locate.of_boundary(p);
      const PointIndex q = head(s.faces[slot.face].walk[slot.position], s);
      std::size_t guard = 0;
      while (true) {
        const auto& walk = s.faces[slot.face].walk;
        const auto& out = walk[(slot.position + 1) % walk.size()];
        if (const auto* t = std::get_if<ArcTraversal>(&out)) {
          slot = locate.of_arc(t->arc, !t->reversed);
          if (++guard > 2 * s.arcs.size() + 1) {
            throw ValidationError({"corner walk at " + s.point_labels[q] + " does not reach the boundary"});
          }
          continue;
        }
        const auto& b = std::get<BoundaryEdge>(out);
        if (b.tail != q) {
          throw ValidationError({"corner walk at " + s.point_labels[q] + " leaves from another point"});
        }
        p = b.tail;
        break;
      }
      if (visited[p] && p != start) {
        throw ValidationError({"boundary walk through " + s.point_labels[p] + " does not close up"});
      }
    } while (p != start);
  }
  return circles;
}

} // namespace agi
