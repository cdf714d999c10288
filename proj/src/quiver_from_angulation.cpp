#include "agi/quiver_from_angulation.hpp"

#include "agi/error.hpp"

#include <functional>

namespace agi {

PartialTriangulation::PartialTriangulation(MarkedSurface surface) : surface_(std::move(surface)) {
  auto problems = structural_problems(surface_);
  for (const auto& face : surface_.faces) {
    if (face.walk.size() != 3 && face.walk.size() != 4) {
      problems.push_back("face " + face.id + " has " + std::to_string(face.walk.size()) +
                         " edges; a partial triangulation has triangles and squares only");
    }
  }
  if (problems.empty() && !is_disc(surface_)) {
    problems.emplace_back("a partial triangulation must be a disc");
  }
  if (!problems.empty()) {
    throw ValidationError(std::move(problems));
  }
}

std::string corner_arrow_id(const Arc& arc, bool reversed) { return arc.id + (reversed ? "-" : "+"); }

namespace {

BoundQuiver corner_quiver(const MarkedSurface& s, const std::function<bool(const Face&)>& relates) {
  BoundQuiver bq;
  for (const auto& arc : s.arcs) {
    bq.add_vertex(arc.id);
  }
  const EdgeLocator locate(s);
  // arrow_at[f][j]: arrow of the corner between positions j and j+1 of face f.
  std::vector<std::vector<std::optional<ArrowIndex>>> arrow_at(s.faces.size());
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    arrow_at[f].resize(s.faces[f].walk.size());
  }
  for (std::size_t a = 0; a < s.arcs.size(); ++a) {
    for (bool reversed : {false, true}) {
      const auto slot = locate.of_arc(a, reversed);
      const auto& walk = s.faces[slot.face].walk;
      const auto* following = std::get_if<ArcTraversal>(&walk[(slot.position + 1) % walk.size()]);
      if (following == nullptr) {
        continue;
      }
      arrow_at[slot.face][slot.position] =
          bq.add_arrow(corner_arrow_id(s.arcs[a], reversed), a, following->arc);
    }
  }
  for (std::size_t f = 0; f < s.faces.size(); ++f) {
    if (!relates(s.faces[f])) {
      continue;
    }
    const auto& corners = arrow_at[f];
    for (std::size_t j = 0; j < corners.size(); ++j) {
      const auto& first = corners[j];
      const auto& second = corners[(j + 1) % corners.size()];
      if (first && second && corners.size() > 1) {
        bq.add_relation(*first, *second);
      }
    }
  }
  return bq;
}

} // namespace

BoundQuiver build_quiver(const Angulation& a) {
  return corner_quiver(a.surface(), [](const Face&) { return true; });
}

std::vector<std::string> validate_partial(const PartialTriangulation& p) {
  std::vector<std::string> out;
  for (const auto& face : p.surface().faces) {
    if (face.walk.size() != 4) {
      continue;
    }
    std::size_t boundary = 0;
    for (const auto& e : face.walk) {
      boundary += is_boundary(e) ? 1 : 0;
    }
    if (boundary != 1) {
      out.push_back("square " + face.id + " has " + std::to_string(boundary) +
                    " boundary edges, expected exactly one");
    }
  }
  return out;
}

BoundQuiver build_quiver_partial(const PartialTriangulation& p) {
  return corner_quiver(p.surface(), [](const Face& f) { return f.walk.size() == 4; });
}

Angulation inflate(const PartialTriangulation& p, int m) {
  if (m < 2) {
    throw InfeasibleParameters("inflation needs m >= 2");
  }
  if (auto problems = validate_partial(p); !problems.empty()) {
    throw ValidationError(std::move(problems));
  }
  MarkedSurface out = p.surface();
  // Fresh points are spliced into the components after all faces are processed.
  std::vector<std::vector<PointIndex>> inserted_after(out.point_count());
  std::size_t fresh = 0;
  for (auto& face : out.faces) {
    const auto runs = boundary_runs(face);
    if (runs.size() != 1) {
      throw ValidationError({"face " + face.id + " has " + std::to_string(runs.size()) +
                             " boundary runs; inflation needs exactly one"});
    }
    const std::size_t extra = static_cast<std::size_t>(m) + 2 - face.walk.size();
    if (extra == 0) {
      continue;
    }
    const std::size_t pos = runs.front().start;
    const auto original = std::get<BoundaryEdge>(face.walk[pos]);
    std::vector<Edge> chain;
    PointIndex from = original.tail;
    for (std::size_t k = 0; k < extra; ++k) {
      const PointIndex q = out.point_labels.size();
      out.point_labels.push_back("fresh" + std::to_string(fresh++));
      inserted_after.resize(out.point_labels.size());
      inserted_after[original.tail].push_back(q);
      chain.emplace_back(BoundaryEdge{from, q});
      from = q;
    }
    chain.emplace_back(BoundaryEdge{from, original.head});
    face.walk.erase(face.walk.begin() + static_cast<std::ptrdiff_t>(pos));
    face.walk.insert(face.walk.begin() + static_cast<std::ptrdiff_t>(pos), chain.begin(), chain.end());
  }
  for (auto& component : out.components) {
    std::vector<PointIndex> points;
    for (PointIndex q : component.points) {
      points.push_back(q);
      points.insert(points.end(), inserted_after[q].begin(), inserted_after[q].end());
    }
    component.points = std::move(points);
  }
  return Angulation(m, std::move(out));
}

} // namespace agi
