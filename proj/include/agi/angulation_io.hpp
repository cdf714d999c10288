#pragma once

#include "agi/angulation.hpp"
#include "agi/quiver_from_angulation.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace agi {

enum class InputKind { quiver, angulation, partial };

/// Classifies a file by its header line (`quiver`, `angulation ...`, `partial ...`).
InputKind detect_input_kind(std::string_view text);

/// Faces of a convex n-gon (points 0..n-1 counter-clockwise) cut by the given
/// diagonals. Throws CrossingDiagonals / ValidationError on bad diagonals.
std::vector<Face> planar_faces(std::size_t n, const std::vector<Arc>& diagonals);

/// As `planar_faces`, additionally requiring every face to have m+2 edges
/// (NotAnAngulation otherwise).
std::vector<Face> faces_from_disc_diagonals(int m, std::size_t n, const std::vector<Arc>& diagonals);

/// Disc with points `d.0 .. d.(n-1)` and the faces cut out by `diagonals`.
MarkedSurface disc_surface(std::size_t n, std::vector<Arc> diagonals);

/// Reads the disc format (`angulation disc`, `m`, `points`, `arc` lines) or the
/// surface format (`angulation surface`, `m`, `boundary`, `arc`, `face` lines).
Angulation parse_angulation(std::string_view text);

/// Reads `partial disc` (points + arcs) or `partial surface` (boundary, arcs, faces).
PartialTriangulation parse_partial(std::string_view text);

/// Surface format; points are written as `<component>.<position>`.
std::string serialize_angulation(const Angulation& a);

/// Disc format. Requires a single component listing points 0..n-1 in order.
std::string serialize_disc(const Angulation& a);

std::string serialize_partial(const PartialTriangulation& p);

} // namespace agi
