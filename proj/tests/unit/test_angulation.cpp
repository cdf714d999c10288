#include "agi/angulation.hpp"
#include "agi/angulation_io.hpp"
#include "agi/bridging.hpp"
#include "agi/error.hpp"
#include "agi/generate.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace agi;

namespace {

std::vector<PointIndex> face_points(const MarkedSurface& s, const Face& f) {
  std::vector<PointIndex> points;
  for (const auto& e : f.walk) {
    points.push_back(tail(e, s));
  }
  return points;
}

std::vector<std::string> labels(const Angulation& a, const std::vector<PointIndex>& points) {
  std::vector<std::string> out;
  for (auto p : points) {
    out.push_back(a.label(p));
  }
  return out;
}

} // namespace

TEST_CASE("faces of the 18-gon") {
  const auto a = parse_angulation(read_fixture("d2.ang"));
  CHECK(a.m() == 2);
  CHECK(a.faces().size() == 8);
  std::set<std::vector<PointIndex>> expected{{0, 1, 2, 3},    {3, 4, 5, 6},     {0, 3, 6, 17},    {6, 7, 8, 17},
                                             {8, 9, 10, 17},  {10, 11, 12, 13}, {13, 14, 15, 16}, {10, 13, 16, 17}};
  CHECK(oracle::face_point_sets(a.surface()) == expected);
  for (const auto& f : a.faces()) {
    const auto points = face_points(a.surface(), f);
    // Interior on the left: the walk visits its points in increasing cyclic order.
    std::size_t descents = 0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      descents += points[(i + 1) % points.size()] < points[i] ? 1 : 0;
    }
    CHECK(descents == 1);
  }
}

TEST_CASE("small disc dissections") {
  CHECK(planar_faces(6, {{"t1", 0, 2}, {"t2", 2, 4}, {"t3", 4, 0}}).size() == 4);
  CHECK(faces_from_disc_diagonals(1, 5, {{"t1", 0, 2}, {"t2", 0, 3}}).size() == 3);
  CHECK_THROWS_AS(faces_from_disc_diagonals(2, 6, {{"t1", 0, 2}, {"t2", 2, 4}}), NotAnAngulation);
  CHECK_THROWS_AS(planar_faces(6, {{"t1", 0, 3}, {"t2", 1, 4}}), CrossingDiagonals);
  CHECK_THROWS_AS(planar_faces(6, {{"t1", 0, 1}}), ValidationError);
  CHECK_THROWS_AS(planar_faces(6, {{"t1", 0, 3}, {"t2", 3, 0}}), ValidationError);
  CHECK_THROWS_AS(parse_angulation("angulation disc\nm 2\npoints 6\narc t1 0 2\narc t2 2 4\n"), NotAnAngulation);
  CHECK_THROWS_AS(parse_angulation("angulation disc\nm 2\npoints 7\n"), ValidationError);
}

TEST_CASE("planar faces agree with recursive splitting") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto a = random_disc_angulation(1 + static_cast<int>(seed % 4), seed % 13, seed);
    CHECK(oracle::face_point_sets(a.surface()) == oracle::faces_by_splitting(a.point_count(), a.arcs()));
  }
}

TEST_CASE("the annulus") {
  const auto a = parse_angulation(read_fixture("ann.ang"));
  CHECK(a.faces().size() == 3);
  CHECK(a.components().size() == 2);
  CHECK(internal_faces(a) == 0);
  const auto marked = marked_points_on_arcs(a);
  REQUIRE(marked.size() == 2);
  CHECK(labels(a, marked[0]) == std::vector<std::string>{"o.0", "o.3"});
  CHECK(labels(a, marked[1]) == std::vector<std::string>{"i.0", "i.1"});
  const auto segments = boundary_segments(a);
  REQUIRE(segments.size() == 4);
  CHECK(std::vector<int>{segments[0].weight, segments[1].weight, segments[2].weight, segments[3].weight} ==
        std::vector<int>{2, 0, 0, 0});
  CHECK(a.label(segments[0].start) == "o.0");
  CHECK(a.label(segments[0].end) == "o.3");
  CHECK(degenerate_faces(a) == std::vector<std::size_t>{2});
  const auto circles = boundary_components_by_walk(a);
  REQUIRE(circles.size() == 2);
  CHECK(circles[0].size() == 4);
  CHECK(circles[1].size() == 2);
}

TEST_CASE("marked points, segments and internal faces of the 18-gon") {
  const auto a = parse_angulation(read_fixture("d2.ang"));
  const auto marked = marked_points_on_arcs(a);
  CHECK(marked.front() == std::vector<PointIndex>{0, 3, 6, 8, 10, 13, 16, 17});
  std::vector<int> weights;
  for (const auto& s : boundary_segments(a)) {
    weights.push_back(s.weight);
  }
  CHECK(weights == std::vector<int>{2, 2, 1, 1, 2, 2, 0, 0});
  CHECK(internal_faces(a) == 0);
  CHECK_FALSE(is_degenerate(a));
  CHECK(boundary_components_by_walk(a) == std::vector<std::vector<PointIndex>>{a.components().front().points});
}

TEST_CASE("pinwheel and bare polygon") {
  const auto hex = parse_angulation(read_fixture("hex.ang"));
  CHECK(internal_faces(hex) == 1);
  const auto bare = random_disc_angulation(1, 0, 3);
  CHECK(bare.point_count() == 3);
  CHECK(boundary_segments(bare).empty());
  CHECK(marked_points_on_arcs(bare).front().empty());
  CHECK(warnings(bare.surface()).size() == 2);
}

TEST_CASE("an octagon with two parallel arcs is degenerate") {
  const auto a = parse_angulation("angulation disc\nm 2\npoints 8\narc t1 0 3\narc t2 4 7\n");
  const auto bad = degenerate_faces(a);
  REQUIRE(bad.size() == 1);
  CHECK(boundary_runs(a.faces()[bad.front()]).size() == 2);
}

TEST_CASE("generator output is valid, deterministic and sized") {
  for (int m = 1; m <= 4; ++m) {
    for (std::size_t arcs = 0; arcs <= 12; ++arcs) {
      const auto a = random_disc_angulation(m, arcs, 1000 + arcs);
      CHECK(a.arcs().size() == arcs);
      CHECK(a.point_count() == arcs * static_cast<std::size_t>(m) + static_cast<std::size_t>(m) + 2);
      CHECK(a == random_disc_angulation(m, arcs, 1000 + arcs));
    }
  }
  const auto a = random_disc_angulation(2, 7, 42);
  CHECK(a.point_count() == 18);
  CHECK_THROWS_AS(random_disc_angulation(0, 1, 1), InfeasibleParameters);
}

TEST_CASE("census invariants on generated angulations") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int m = 1 + static_cast<int>(seed % 4);
    const auto a = random_disc_angulation(m, seed % 12, seed);
    const auto& s = a.surface();
    CHECK(s.faces.size() * static_cast<std::size_t>(m + 2) == s.point_count() + 2 * s.arcs.size());
    CHECK(a.point_count() % static_cast<std::size_t>(m) == 2 % static_cast<std::size_t>(m));
    CHECK(s.arcs.size() == (a.point_count() - static_cast<std::size_t>(m) - 2) / static_cast<std::size_t>(m));
    const auto marked = marked_points_on_arcs(a);
    int total = static_cast<int>(marked.front().size());
    for (const auto& seg : boundary_segments(a)) {
      total += seg.weight;
    }
    if (!s.arcs.empty()) {
      CHECK(total == static_cast<int>(a.point_count()));
    }
    const auto degenerate = degenerate_faces(a);
    for (std::size_t f = 0; f < s.faces.size(); ++f) {
      const bool bad = std::find(degenerate.begin(), degenerate.end(), f) != degenerate.end();
      CHECK(bad == (boundary_runs(s.faces[f]).size() > 1));
    }
  }
}

TEST_CASE("angulation text round-trips") {
  for (const char* name : {"d2.ang", "ann.ang", "hex.ang", "fourcpts.ang"}) {
    const auto a = parse_angulation(read_fixture(name));
    CHECK(parse_angulation(serialize_angulation(a)) == a);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto a = random_disc_angulation(1 + static_cast<int>(seed % 4), seed % 12, seed);
    CHECK(parse_angulation(serialize_disc(a)) == a);
    CHECK(parse_angulation(serialize_angulation(a)).surface().faces.size() == a.faces().size());
    CHECK(serialize_angulation(parse_angulation(serialize_angulation(a))) == serialize_angulation(a));
  }
}

TEST_CASE("surface format errors") {
  const std::string head = "angulation surface\nm 1\nboundary d 3\n";
  CHECK_THROWS_AS(parse_angulation(head + "face f b:d:0 b:d:1\n"), ValidationError);
  CHECK_THROWS_AS(parse_angulation(head + "face f b:d:0 b:d:2 b:d:1\n"), ValidationError);
  CHECK_THROWS_AS(parse_angulation(head + "face f b:e:0 b:d:1 b:d:2\n"), ParseError);
  CHECK_THROWS_AS(parse_angulation(head + "face f a:t:+ b:d:1 b:d:2\n"), ParseError);
  CHECK_THROWS_AS(parse_angulation(head + "arc t d.0 d.7\n"), ParseError);
  CHECK_THROWS_AS(parse_angulation("angulation surface\nm x\n"), ParseError);
  CHECK_NOTHROW(parse_angulation(head + "face f b:d:0 b:d:1 b:d:2\n"));
}

TEST_CASE("a unicode minus is read as a reversed traversal") {
  auto text = read_fixture("ann.ang");
  const auto at = text.find("a:t2:-");
  text.replace(at, 6, "a:t2:−");
  CHECK(parse_angulation(text) == parse_angulation(read_fixture("ann.ang")));
}
