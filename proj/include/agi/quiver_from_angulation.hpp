#pragma once

#include "agi/angulation.hpp"
#include "agi/quiver.hpp"

#include <string>
#include <vector>

namespace agi {

/// Partial triangulation of a disc: every face is a triangle or a square.
/// Construction checks the map and the face sizes; the square condition is
/// reported separately by `validate_partial`.
class PartialTriangulation {
public:
  explicit PartialTriangulation(MarkedSurface surface);

  const MarkedSurface& surface() const noexcept { return surface_; }

  bool operator==(const PartialTriangulation&) const = default;

private:
  MarkedSurface surface_;
};

/// Id of the arrow at the corner that starts with the given arc traversal,
/// e.g. `t3+`. Stable under bridging and inflation.
std::string corner_arrow_id(const Arc& arc, bool reversed);

/// (Q_T, I_T): one vertex per arc (named by the arc id), one arrow per corner
/// between consecutive arcs of a face walk, and a relation for every two
/// consecutive corners of the same face. Arrows are ordered by
/// (arc, + before -) of their first traversal.
BoundQuiver build_quiver(const Angulation& a);

/// Squares whose walk does not contain exactly one boundary edge.
std::vector<std::string> validate_partial(const PartialTriangulation& p);

/// Same corner rule; relations only between corners of the same square.
BoundQuiver build_quiver_partial(const PartialTriangulation& p);

/// Adds m+2-size fresh points to the single boundary run of each face, right
/// after the run's first point. Arcs and corners are untouched. Requires m >= 2.
Angulation inflate(const PartialTriangulation& p, int m);

} // namespace agi
