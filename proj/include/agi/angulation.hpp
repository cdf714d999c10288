#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace agi {

using PointIndex = std::size_t;

/// An arc between two marked points. The `+` traversal runs tail -> head.
struct Arc {
  std::string id;
  PointIndex tail = 0;
  PointIndex head = 0;

  bool operator==(const Arc&) const = default;
};

struct ArcTraversal {
  std::size_t arc = 0;
  bool reversed = false;

  bool operator==(const ArcTraversal&) const = default;
};

/// Boundary edge from `tail` to the next marked point of its component.
struct BoundaryEdge {
  PointIndex tail = 0;
  PointIndex head = 0;

  bool operator==(const BoundaryEdge&) const = default;
};

using Edge = std::variant<ArcTraversal, BoundaryEdge>;

inline bool is_arc(const Edge& e) noexcept { return std::holds_alternative<ArcTraversal>(e); }
inline bool is_boundary(const Edge& e) noexcept { return std::holds_alternative<BoundaryEdge>(e); }

/// A face as the closed walk of its edges, interior on the left.
struct Face {
  std::string id;
  std::vector<Edge> walk;

  bool operator==(const Face&) const = default;
};

/// A boundary circle: its marked points in counter-clockwise order.
struct BoundaryComponent {
  std::string name;
  std::vector<PointIndex> points;

  bool operator==(const BoundaryComponent&) const = default;
};

/// Combinatorial map of an unpunctured marked surface: marked points on the
/// boundary, arcs between them and the faces they cut out.
struct MarkedSurface {
  std::vector<std::string> point_labels;
  std::vector<BoundaryComponent> components;
  std::vector<Arc> arcs;
  std::vector<Face> faces;

  std::size_t point_count() const noexcept { return point_labels.size(); }

  bool operator==(const MarkedSurface&) const = default;
};

PointIndex tail(const Edge& e, const MarkedSurface& s);
PointIndex head(const Edge& e, const MarkedSurface& s);

/// Structural problems: walks that do not close up, arcs or boundary edges not
/// covered exactly once (arcs once per direction), boundary edges that
/// disagree with the declared components, and points whose corners do not form
/// a single fan from the incoming to the outgoing boundary edge.
std::vector<std::string> structural_problems(const MarkedSurface& s);

/// Euler characteristic V - E + F of the map.
long euler_characteristic(const MarkedSurface& s);

/// One boundary component and Euler characteristic 1.
bool is_disc(const MarkedSurface& s);

/// Maximal cyclic block of consecutive edges of one kind inside a face walk.
struct Run {
  std::size_t start = 0;   // position in the walk of its first edge
  std::size_t length = 0;  // number of edges
};

std::vector<Run> boundary_runs(const Face& f);
std::vector<Run> arc_runs(const Face& f);

/// Position of each edge in the face walks.
class EdgeLocator {
public:
  struct Slot {
    std::size_t face = 0;
    std::size_t position = 0;
  };

  explicit EdgeLocator(const MarkedSurface& s);

  Slot of_arc(std::size_t arc, bool reversed) const { return arc_slots_.at(2 * arc + (reversed ? 1 : 0)); }
  Slot of_boundary(PointIndex tail) const { return boundary_slots_.at(tail); }
  bool has_boundary(PointIndex tail) const { return boundary_present_.at(tail); }

private:
  std::vector<Slot> arc_slots_;
  std::vector<Slot> boundary_slots_;
  std::vector<bool> boundary_present_;
};

/// A maximal boundary run between consecutive arc endpoints of one component.
struct BoundarySegment {
  std::size_t component = 0;
  PointIndex start = 0;
  PointIndex end = 0;
  int weight = 0;        // marked points strictly inside the run
  std::size_t face = 0;  // the face whose walk contains the run

  bool operator==(const BoundarySegment&) const = default;
};

/// An (m+2)-angulation: every face of the map has exactly m+2 edges.
///
/// Construction validates; an invalid map throws ValidationError.
class Angulation {
public:
  Angulation(int m, MarkedSurface surface);

  int m() const noexcept { return m_; }
  const MarkedSurface& surface() const noexcept { return surface_; }
  const std::vector<Arc>& arcs() const noexcept { return surface_.arcs; }
  const std::vector<Face>& faces() const noexcept { return surface_.faces; }
  const std::vector<BoundaryComponent>& components() const noexcept { return surface_.components; }
  std::size_t point_count() const noexcept { return surface_.point_count(); }
  const std::string& label(PointIndex p) const { return surface_.point_labels.at(p); }

  bool operator==(const Angulation&) const = default;

private:
  int m_;
  MarkedSurface surface_;
};

/// Every problem that keeps `(m, surface)` from being an (m+2)-angulation.
std::vector<std::string> angulation_problems(int m, const MarkedSurface& surface);

/// Non-fatal remarks, e.g. boundary components without arc endpoints.
std::vector<std::string> warnings(const MarkedSurface& s);

/// M_T: arc endpoints, per boundary component, in counter-clockwise order
/// starting from the component's first point.
std::vector<std::vector<PointIndex>> marked_points_on_arcs(const MarkedSurface& s);

/// 𝔅 with weights, per component in counter-clockwise order. Components
/// carrying no arc endpoint contribute nothing.
std::vector<BoundarySegment> boundary_segments(const MarkedSurface& s);

/// Faces whose walk has no boundary edge.
std::size_t internal_faces(const MarkedSurface& s);

/// Faces meeting two or more boundary runs.
std::vector<std::size_t> degenerate_faces(const MarkedSurface& s);
bool is_degenerate(const MarkedSurface& s);

/// Boundary circles traced through the faces by corner hopping; each starts
/// at its smallest point, circles ordered by that point.
std::vector<std::vector<PointIndex>> boundary_components_by_walk(const MarkedSurface& s);

inline std::vector<std::vector<PointIndex>> marked_points_on_arcs(const Angulation& a) {
  return marked_points_on_arcs(a.surface());
}
inline std::vector<BoundarySegment> boundary_segments(const Angulation& a) {
  return boundary_segments(a.surface());
}
inline std::size_t internal_faces(const Angulation& a) { return internal_faces(a.surface()); }
inline std::vector<std::size_t> degenerate_faces(const Angulation& a) {
  return degenerate_faces(a.surface());
}
inline bool is_degenerate(const Angulation& a) { return is_degenerate(a.surface()); }
inline std::vector<std::vector<PointIndex>> boundary_components_by_walk(const Angulation& a) {
  return boundary_components_by_walk(a.surface());
}

} // namespace agi
