#include "agi/bridging.hpp"

#include "agi/error.hpp"

#include <numeric>
#include <set>

namespace agi {

namespace {

// Working copy of a surface that may lose points and gain fresh ones.
// `finish` renumbers the survivors and recomputes the boundary circles.
class Rebuild {
public:
  explicit Rebuild(const MarkedSurface& s)
      : surface_(s), removed_(s.point_count(), false), used_(s.point_labels.begin(), s.point_labels.end()) {}

  MarkedSurface& surface() { return surface_; }

  void remove(PointIndex p) { removed_.at(p) = true; }

  PointIndex fresh_point() {
    std::string label;
    do {
      label = "fresh" + std::to_string(counter_++);
    } while (used_.contains(label));
    used_.insert(label);
    surface_.point_labels.push_back(label);
    removed_.push_back(false);
    return surface_.point_labels.size() - 1;
  }

  // Boundary run tail -> fresh... -> head with `count` new points.
  std::vector<Edge> fresh_run(PointIndex from, PointIndex to, int count) {
    std::vector<Edge> run;
    for (int k = 0; k < count; ++k) {
      const PointIndex q = fresh_point();
      run.emplace_back(BoundaryEdge{from, q});
      from = q;
    }
    run.emplace_back(BoundaryEdge{from, to});
    return run;
  }

  MarkedSurface finish() {
    std::vector<PointIndex> index(surface_.point_count(), 0);
    MarkedSurface out;
    for (PointIndex p = 0; p < surface_.point_count(); ++p) {
      if (!removed_[p]) {
        index[p] = out.point_labels.size();
        out.point_labels.push_back(surface_.point_labels[p]);
      }
    }
    out.arcs = surface_.arcs;
    for (auto& arc : out.arcs) {
      arc.tail = index[arc.tail];
      arc.head = index[arc.head];
    }
    out.faces = surface_.faces;
    for (auto& face : out.faces) {
      for (auto& e : face.walk) {
        if (auto* b = std::get_if<BoundaryEdge>(&e)) {
          b->tail = index[b->tail];
          b->head = index[b->head];
        }
      }
    }
    const auto circles = boundary_components_by_walk(out);
    for (std::size_t i = 0; i < circles.size(); ++i) {
      out.components.push_back({"c" + std::to_string(i), circles[i]});
    }
    return out;
  }

private:
  MarkedSurface surface_;
  std::vector<bool> removed_;
  std::set<std::string> used_;
  std::size_t counter_ = 0;
};

std::vector<Edge> slice(const std::vector<Edge>& walk, const Run& run) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < run.length; ++i) {
    out.push_back(walk[(run.start + i) % walk.size()]);
  }
  return out;
}

void drop_interior_points(Rebuild& rebuild, const std::vector<Edge>& walk, const Run& run) {
  for (std::size_t i = 0; i + 1 < run.length; ++i) {
    rebuild.remove(std::get<BoundaryEdge>(walk[(run.start + i) % walk.size()]).head);
  }
}

AgFunction per_component(const Angulation& a) {
  const auto& s = a.surface();
  AgFunction out;
  out.add(0, a.m() + 2, static_cast<int>(internal_faces(s)));
  const auto marked = marked_points_on_arcs(s);
  std::vector<int> b(s.components.size(), 0);
  for (const auto& segment : boundary_segments(s)) {
    b[segment.component] += a.m() - segment.weight;
  }
  for (std::size_t c = 0; c < s.components.size(); ++c) {
    if (!marked[c].empty()) {
      out.add(static_cast<int>(marked[c].size()), b[c]);
    }
  }
  return out;
}

} // namespace

Angulation remove_boundary_bridges(const Angulation& a) {
  const auto degenerate = degenerate_faces(a);
  if (degenerate.empty()) {
    return a;
  }
  Rebuild rebuild(a.surface());
  const auto& original = a.surface();
  std::vector<Face> faces;
  std::size_t next_degenerate = 0;
  for (std::size_t f = 0; f < original.faces.size(); ++f) {
    const auto& face = original.faces[f];
    if (next_degenerate == degenerate.size() || degenerate[next_degenerate] != f) {
      faces.push_back(face);
      continue;
    }
    ++next_degenerate;
    const auto runs = boundary_runs(face);
    for (const auto& run : runs) {
      drop_interior_points(rebuild, face.walk, run);
    }
    const auto pieces = arc_runs(face);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      auto walk = slice(face.walk, pieces[i]);
      const int k = static_cast<int>(walk.size());
      const auto from = head(walk.back(), original);
      const auto to = tail(walk.front(), original);
      for (auto& e : rebuild.fresh_run(from, to, a.m() + 1 - k)) {
        walk.push_back(e);
      }
      faces.push_back({face.id + "_" + std::to_string(i + 1), std::move(walk)});
    }
  }
  rebuild.surface().faces = std::move(faces);
  return Angulation(a.m(), rebuild.finish());
}

AgFunction ag_invariant_formula(const Angulation& a) { return per_component(remove_boundary_bridges(a)); }

AgFunction naive_per_component(const Angulation& a) { return per_component(a); }

Angulation merge_inverse_bridge(const Angulation& a, const std::vector<std::size_t>& faces,
                                const std::vector<int>& weights) {
  const auto& original = a.surface();
  if (faces.size() < 2) {
    throw InfeasibleParameters("merging needs at least two faces");
  }
  if (weights.size() != faces.size()) {
    throw InfeasibleParameters("merging needs one weight per selected face");
  }
  if (std::set<std::size_t>(faces.begin(), faces.end()).size() != faces.size()) {
    throw InfeasibleParameters("a face is selected twice");
  }
  std::vector<Run> arcs_of(faces.size());
  std::vector<Run> boundary_of(faces.size());
  int total = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i] >= original.faces.size()) {
      throw InfeasibleParameters("face index out of range");
    }
    const auto& face = original.faces[faces[i]];
    const auto b = boundary_runs(face);
    const auto t = arc_runs(face);
    if (b.size() != 1 || t.size() != 1) {
      throw InfeasibleParameters("face " + face.id + " does not have exactly one boundary run and one arc run");
    }
    if (weights[i] < 0) {
      throw InfeasibleParameters("weights must be non-negative");
    }
    arcs_of[i] = t.front();
    boundary_of[i] = b.front();
    total += static_cast<int>(t.front().length) + weights[i] + 1;
  }
  if (total != a.m() + 2) {
    throw InfeasibleParameters("merged face would have " + std::to_string(total) + " edges, expected " +
                               std::to_string(a.m() + 2));
  }

  Rebuild rebuild(original);
  Face merged{original.faces[faces.front()].id, {}};
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto& walk = original.faces[faces[i]].walk;
    drop_interior_points(rebuild, walk, boundary_of[i]);
    const auto run = slice(walk, arcs_of[i]);
    merged.walk.insert(merged.walk.end(), run.begin(), run.end());
    const auto& next_walk = original.faces[faces[(i + 1) % faces.size()]].walk;
    const auto to = tail(next_walk[arcs_of[(i + 1) % faces.size()].start], original);
    for (auto& e : rebuild.fresh_run(head(run.back(), original), to, weights[i])) {
      merged.walk.push_back(e);
    }
  }
  std::vector<Face> out_faces;
  const std::set<std::size_t> selected(faces.begin(), faces.end());
  for (std::size_t f = 0; f < original.faces.size(); ++f) {
    if (f == faces.front()) {
      out_faces.push_back(merged);
    } else if (!selected.contains(f)) {
      out_faces.push_back(original.faces[f]);
    }
  }
  rebuild.surface().faces = std::move(out_faces);
  return Angulation(a.m(), rebuild.finish());
}

Angulation disjoint_union(const Angulation& x, const Angulation& y) {
  if (x.m() != y.m()) {
    throw InfeasibleParameters("disjoint union needs equal m");
  }
  MarkedSurface out;
  for (const auto& [prefix, part] : {std::pair{"x", &x.surface()}, std::pair{"y", &y.surface()}}) {
    const std::size_t point_offset = out.point_labels.size();
    const std::size_t arc_offset = out.arcs.size();
    for (const auto& label : part->point_labels) {
      out.point_labels.push_back(prefix + label);
    }
    for (const auto& c : part->components) {
      BoundaryComponent shifted{prefix + c.name, {}};
      for (PointIndex p : c.points) {
        shifted.points.push_back(p + point_offset);
      }
      out.components.push_back(std::move(shifted));
    }
    for (const auto& arc : part->arcs) {
      out.arcs.push_back({prefix + arc.id, arc.tail + point_offset, arc.head + point_offset});
    }
    for (const auto& face : part->faces) {
      Face shifted{prefix + face.id, {}};
      for (const auto& e : face.walk) {
        if (const auto* t = std::get_if<ArcTraversal>(&e)) {
          shifted.walk.emplace_back(ArcTraversal{t->arc + arc_offset, t->reversed});
        } else {
          const auto& b = std::get<BoundaryEdge>(e);
          shifted.walk.emplace_back(BoundaryEdge{b.tail + point_offset, b.head + point_offset});
        }
      }
      out.faces.push_back(std::move(shifted));
    }
  }
  return Angulation(x.m(), std::move(out));
}

} // namespace agi
