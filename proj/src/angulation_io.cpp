#include "agi/angulation_io.hpp"

#include "agi/error.hpp"
#include "lines.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace agi {

InputKind detect_input_kind(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) {
    throw ParseError(0, "empty input");
  }
  const auto& keyword = lines.front().tokens.front();
  if (keyword == "quiver") {
    return InputKind::quiver;
  }
  if (keyword == "angulation") {
    return InputKind::angulation;
  }
  if (keyword == "partial") {
    return InputKind::partial;
  }
  throw ParseError(lines.front().number, "unknown header `" + keyword + "`");
}

namespace {

bool strictly_between(std::size_t x, std::size_t lo, std::size_t hi) { return lo < x && x < hi; }

bool crossing(const Arc& a, const Arc& b) {
  const auto lo = std::min(a.tail, a.head);
  const auto hi = std::max(a.tail, a.head);
  if (b.tail == a.tail || b.tail == a.head || b.head == a.tail || b.head == a.head) {
    return false;
  }
  return strictly_between(b.tail, lo, hi) != strictly_between(b.head, lo, hi);
}

} // namespace

std::vector<Face> planar_faces(std::size_t n, const std::vector<Arc>& diagonals) {
  if (n < 3) {
    throw ValidationError({"a polygon needs at least 3 marked points"});
  }
  std::vector<std::string> problems;
  std::map<std::pair<PointIndex, PointIndex>, std::size_t> by_pair;
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    const auto& d = diagonals[i];
    if (d.tail >= n || d.head >= n) {
      problems.push_back("diagonal " + d.id + " has an endpoint outside 0.." + std::to_string(n - 1));
      continue;
    }
    const auto gap = (d.head + n - d.tail) % n;
    if (gap == 0 || gap == 1 || gap == n - 1) {
      problems.push_back("diagonal " + d.id + " joins equal or adjacent points");
      continue;
    }
    const auto key = std::minmax(d.tail, d.head);
    if (!by_pair.emplace(key, i).second) {
      problems.push_back("diagonal " + d.id + " duplicates " + diagonals[by_pair[key]].id);
    }
  }
  if (!problems.empty()) {
    throw ValidationError(std::move(problems));
  }
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
      if (crossing(diagonals[i], diagonals[j])) {
        problems.push_back("diagonals " + diagonals[i].id + " and " + diagonals[j].id + " cross");
      }
    }
  }
  if (!problems.empty()) {
    throw CrossingDiagonals(std::move(problems));
  }

  std::vector<std::vector<PointIndex>> neighbours(n);
  for (PointIndex v = 0; v < n; ++v) {
    neighbours[v].push_back((v + 1) % n);
    neighbours[v].push_back((v + n - 1) % n);
  }
  for (const auto& d : diagonals) {
    neighbours[d.tail].push_back(d.head);
    neighbours[d.head].push_back(d.tail);
  }
  auto offset = [n](PointIndex from, PointIndex to) { return (to + n - from) % n; };
  auto edge_between = [&](PointIndex u, PointIndex v) -> Edge {
    if (v == (u + 1) % n) {
      return BoundaryEdge{u, v};
    }
    const auto idx = by_pair.at(std::minmax(u, v));
    return ArcTraversal{idx, diagonals[idx].tail != u};
  };
  // The face left of u->v continues along the neighbour w of v with the
  // largest counter-clockwise offset from v that is still below u's offset.
  auto next_point = [&](PointIndex u, PointIndex v) {
    const auto limit = offset(v, u);
    PointIndex best = n;
    std::size_t best_offset = 0;
    for (PointIndex w : neighbours[v]) {
      const auto o = offset(v, w);
      if (o < limit && (best == n || o > best_offset)) {
        best = w;
        best_offset = o;
      }
    }
    return best;
  };

  std::set<std::pair<PointIndex, PointIndex>> used;
  std::vector<std::pair<PointIndex, PointIndex>> starts;
  for (PointIndex v = 0; v < n; ++v) {
    starts.emplace_back(v, (v + 1) % n);
  }
  for (const auto& d : diagonals) {
    starts.emplace_back(d.tail, d.head);
    starts.emplace_back(d.head, d.tail);
  }
  std::vector<Face> faces;
  for (const auto& [u0, v0] : starts) {
    if (used.contains({u0, v0})) {
      continue;
    }
    std::vector<PointIndex> cycle;
    PointIndex u = u0;
    PointIndex v = v0;
    do {
      used.insert({u, v});
      cycle.push_back(u);
      const auto w = next_point(u, v);
      u = v;
      v = w;
    } while (!(u == u0 && v == v0));
    const auto smallest = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
    std::rotate(cycle.begin(), cycle.begin() + smallest, cycle.end());
    Face face{"f" + std::to_string(faces.size()), {}};
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      face.walk.push_back(edge_between(cycle[i], cycle[(i + 1) % cycle.size()]));
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

std::vector<Face> faces_from_disc_diagonals(int m, std::size_t n, const std::vector<Arc>& diagonals) {
  auto faces = planar_faces(n, diagonals);
  std::vector<std::string> problems;
  for (const auto& face : faces) {
    if (face.walk.size() != static_cast<std::size_t>(m) + 2) {
      problems.push_back("face " + face.id + " has " + std::to_string(face.walk.size()) +
                         " edges, expected " + std::to_string(m + 2));
    }
  }
  if (!problems.empty()) {
    throw NotAnAngulation(std::move(problems));
  }
  return faces;
}

MarkedSurface disc_surface(std::size_t n, std::vector<Arc> diagonals) {
  MarkedSurface s;
  auto faces = planar_faces(n, diagonals);
  BoundaryComponent component{"d", {}};
  for (PointIndex p = 0; p < n; ++p) {
    s.point_labels.push_back("d." + std::to_string(p));
    component.points.push_back(p);
  }
  s.components.push_back(std::move(component));
  s.arcs = std::move(diagonals);
  s.faces = std::move(faces);
  return s;
}

namespace {

using detail::Line;

long parse_int(const std::string& token, std::size_t line) {
  long value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected an integer, got `" + token + "`");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t n, const char* usage) {
  if (line.tokens.size() != n) {
    throw ParseError(line.number, std::string("expected `") + usage + "`");
  }
}

// Maps `<name>.<idx>` and boundary/arc edge tokens onto a surface under construction.
class SurfaceReader {
public:
  void boundary(const Line& line) {
    expect_arity(line, 3, "boundary <name> <pointCount>");
    const auto& name = line.tokens[1];
    const long count = parse_int(line.tokens[2], line.number);
    if (count < 1) {
      throw ParseError(line.number, "a boundary component needs at least one marked point");
    }
    if (component_of_.contains(name)) {
      throw ParseError(line.number, "duplicate boundary component " + name);
    }
    component_of_[name] = surface_.components.size();
    BoundaryComponent c{name, {}};
    for (long i = 0; i < count; ++i) {
      c.points.push_back(surface_.point_labels.size());
      surface_.point_labels.push_back(name + "." + std::to_string(i));
    }
    surface_.components.push_back(std::move(c));
  }

  void arc(const Line& line) {
    expect_arity(line, 4, "arc <id> <point> <point>");
    if (arc_of_.contains(line.tokens[1])) {
      throw ParseError(line.number, "duplicate arc " + line.tokens[1]);
    }
    arc_of_[line.tokens[1]] = surface_.arcs.size();
    surface_.arcs.push_back({line.tokens[1], point(line.tokens[2], line.number), point(line.tokens[3], line.number)});
  }

  void face(const Line& line) {
    if (line.tokens.size() < 3) {
      throw ParseError(line.number, "expected `face <id> <edge> <edge> ...`");
    }
    Face f{line.tokens[1], {}};
    for (std::size_t i = 2; i < line.tokens.size(); ++i) {
      f.walk.push_back(edge(line.tokens[i], line.number));
    }
    surface_.faces.push_back(std::move(f));
  }

  MarkedSurface& surface() { return surface_; }

private:
  std::pair<std::size_t, std::size_t> locate(const std::string& name, const std::string& idx, std::size_t line) {
    auto it = component_of_.find(name);
    if (it == component_of_.end()) {
      throw ParseError(line, "unknown boundary component " + name);
    }
    const long i = parse_int(idx, line);
    const auto& points = surface_.components[it->second].points;
    if (i < 0 || static_cast<std::size_t>(i) >= points.size()) {
      throw ParseError(line, "point index " + idx + " out of range for component " + name);
    }
    return {it->second, static_cast<std::size_t>(i)};
  }

  PointIndex point(const std::string& token, std::size_t line) {
    const auto dot = token.rfind('.');
    if (dot == std::string::npos) {
      throw ParseError(line, "expected a point `<component>.<index>`, got `" + token + "`");
    }
    const auto [c, i] = locate(token.substr(0, dot), token.substr(dot + 1), line);
    return surface_.components[c].points[i];
  }

  Edge edge(const std::string& token, std::size_t line) {
    const auto first = token.find(':');
    const auto last = token.rfind(':');
    if (first == std::string::npos || first == last) {
      throw ParseError(line, "expected an edge `a:<arc>:+|-` or `b:<component>:<index>`, got `" + token + "`");
    }
    const auto kind = token.substr(0, first);
    const auto middle = token.substr(first + 1, last - first - 1);
    const auto suffix = token.substr(last + 1);
    if (kind == "a") {
      auto it = arc_of_.find(middle);
      if (it == arc_of_.end()) {
        throw ParseError(line, "unknown arc " + middle);
      }
      if (suffix == "+") {
        return ArcTraversal{it->second, false};
      }
      if (suffix == "-" || suffix == "−") {
        return ArcTraversal{it->second, true};
      }
      throw ParseError(line, "arc direction must be + or -");
    }
    if (kind == "b") {
      const auto [c, i] = locate(middle, suffix, line);
      const auto& points = surface_.components[c].points;
      return BoundaryEdge{points[i], points[(i + 1) % points.size()]};
    }
    throw ParseError(line, "unknown edge kind `" + kind + "`");
  }

  MarkedSurface surface_;
  std::map<std::string, std::size_t> component_of_;
  std::map<std::string, std::size_t> arc_of_;
};

struct Header {
  std::string kind;  // "disc" or "surface"
  long m = 0;        // 0 when absent
};

Header read_header(const std::vector<Line>& lines, const std::string& keyword, bool want_m) {
  if (lines.empty() || lines.front().tokens.front() != keyword) {
    throw ParseError(lines.empty() ? 0 : lines.front().number, "expected header `" + keyword + " disc|surface`");
  }
  expect_arity(lines.front(), 2, (keyword + " disc|surface").c_str());
  Header h{lines.front().tokens[1], 0};
  if (h.kind != "disc" && h.kind != "surface") {
    throw ParseError(lines.front().number, "unknown " + keyword + " kind `" + h.kind + "`");
  }
  if (want_m) {
    if (lines.size() < 2 || lines[1].tokens.front() != "m") {
      throw ParseError(lines.size() < 2 ? lines.front().number : lines[1].number, "expected `m <int>`");
    }
    expect_arity(lines[1], 2, "m <int>");
    h.m = parse_int(lines[1].tokens[1], lines[1].number);
    if (h.m < 1) {
      throw ParseError(lines[1].number, "m must be a positive integer");
    }
  }
  return h;
}

MarkedSurface read_disc(const std::vector<Line>& lines, std::size_t first) {
  long points = -1;
  std::vector<Arc> arcs;
  std::set<std::string> ids;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& keyword = line.tokens.front();
    if (keyword == "points") {
      expect_arity(line, 2, "points <int>");
      points = parse_int(line.tokens[1], line.number);
      if (points < 3) {
        throw ParseError(line.number, "a disc needs at least 3 marked points");
      }
    } else if (keyword == "arc") {
      expect_arity(line, 4, "arc <id> <point> <point>");
      if (points < 0) {
        throw ParseError(line.number, "`points` must precede the arcs");
      }
      if (!ids.insert(line.tokens[1]).second) {
        throw ParseError(line.number, "duplicate arc " + line.tokens[1]);
      }
      const long a = parse_int(line.tokens[2], line.number);
      const long b = parse_int(line.tokens[3], line.number);
      if (a < 0 || b < 0 || a >= points || b >= points) {
        throw ParseError(line.number, "arc endpoint out of range");
      }
      arcs.push_back({line.tokens[1], static_cast<PointIndex>(a), static_cast<PointIndex>(b)});
    } else {
      throw ParseError(line.number, "unknown keyword `" + keyword + "`");
    }
  }
  if (points < 0) {
    throw ParseError(0, "missing `points` line");
  }
  return disc_surface(static_cast<std::size_t>(points), std::move(arcs));
}

MarkedSurface read_surface(const std::vector<Line>& lines, std::size_t first) {
  SurfaceReader reader;
  for (std::size_t i = first; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& keyword = line.tokens.front();
    if (keyword == "boundary") {
      reader.boundary(line);
    } else if (keyword == "arc") {
      reader.arc(line);
    } else if (keyword == "face") {
      reader.face(line);
    } else {
      throw ParseError(line.number, "unknown keyword `" + keyword + "`");
    }
  }
  return std::move(reader.surface());
}

std::string point_ref(const MarkedSurface& s, PointIndex p) {
  for (const auto& c : s.components) {
    auto it = std::find(c.points.begin(), c.points.end(), p);
    if (it != c.points.end()) {
      return c.name + "." + std::to_string(it - c.points.begin());
    }
  }
  throw Error("point " + s.point_labels.at(p) + " lies on no boundary component");
}

void write_surface_body(std::ostream& out, const MarkedSurface& s) {
  for (const auto& c : s.components) {
    out << "boundary " << c.name << ' ' << c.points.size() << '\n';
  }
  for (const auto& arc : s.arcs) {
    out << "arc " << arc.id << ' ' << point_ref(s, arc.tail) << ' ' << point_ref(s, arc.head) << '\n';
  }
  for (const auto& face : s.faces) {
    out << "face " << face.id;
    for (const auto& e : face.walk) {
      if (const auto* t = std::get_if<ArcTraversal>(&e)) {
        out << " a:" << s.arcs[t->arc].id << ':' << (t->reversed ? '-' : '+');
      } else {
        const auto ref = point_ref(s, std::get<BoundaryEdge>(e).tail);
        const auto dot = ref.rfind('.');
        out << " b:" << ref.substr(0, dot) << ':' << ref.substr(dot + 1);
      }
    }
    out << '\n';
  }
}

} // namespace

Angulation parse_angulation(std::string_view text) {
  const auto lines = detail::tokenize(text);
  const auto header = read_header(lines, "angulation", true);
  auto surface = header.kind == "disc" ? read_disc(lines, 2) : read_surface(lines, 2);
  const int m = static_cast<int>(header.m);
  if (header.kind == "disc") {
    // Re-check through the face-size path so a bad disc reports NotAnAngulation.
    faces_from_disc_diagonals(m, surface.point_count(), surface.arcs);
  }
  return Angulation(m, std::move(surface));
}

PartialTriangulation parse_partial(std::string_view text) {
  const auto lines = detail::tokenize(text);
  const auto header = read_header(lines, "partial", false);
  auto surface = header.kind == "disc" ? read_disc(lines, 1) : read_surface(lines, 1);
  return PartialTriangulation(std::move(surface));
}

std::string serialize_angulation(const Angulation& a) {
  std::ostringstream out;
  out << "angulation surface\nm " << a.m() << '\n';
  write_surface_body(out, a.surface());
  return out.str();
}

std::string serialize_disc(const Angulation& a) {
  const auto& s = a.surface();
  if (s.components.size() != 1) {
    throw Error("the disc format needs exactly one boundary component");
  }
  const auto& points = s.components.front().points;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] != i) {
      throw Error("the disc format needs points listed 0..n-1 in order");
    }
  }
  std::ostringstream out;
  out << "angulation disc\nm " << a.m() << "\npoints " << points.size() << '\n';
  for (const auto& arc : s.arcs) {
    out << "arc " << arc.id << ' ' << arc.tail << ' ' << arc.head << '\n';
  }
  return out.str();
}

std::string serialize_partial(const PartialTriangulation& p) {
  std::ostringstream out;
  out << "partial surface\n";
  write_surface_body(out, p.surface());
  return out.str();
}

} // namespace agi
