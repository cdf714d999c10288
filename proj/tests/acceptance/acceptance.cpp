// One line per acceptance criterion; exits nonzero if any criterion fails.

#include "agi/ag_direct.hpp"
#include "agi/angulation_io.hpp"
#include "agi/batch.hpp"
#include "agi/bridging.hpp"
#include "agi/cli.hpp"
#include "agi/error.hpp"
#include "agi/generate.hpp"
#include "agi/quiver_from_angulation.hpp"

#include "fixtures.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace agi;

namespace {

using Problems = std::vector<std::string>;

struct CliRun {
  int code = 0;
  std::string out;
};

CliRun cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str()};
}

AgFunction pairs(std::initializer_list<std::pair<int, int>> list) {
  AgFunction f;
  for (auto [n, m] : list) {
    f.add(n, m);
  }
  return f;
}

void expect(Problems& p, bool ok, const std::string& what) {
  if (!ok) {
    p.push_back(what);
  }
}

using Row = std::pair<std::string, std::string>;

// Rows H_i | F_i of each walk, rotated to start at the least row so that
// tables starting at different threads compare equal.
std::vector<std::vector<Row>> walk_tables(const BoundQuiver& bq) {
  const PairingContext ctx(bq);
  std::vector<std::vector<Row>> tables;
  for (const auto& walk : trace_ag(ctx).walks) {
    std::vector<Row> rows;
    for (const auto& step : walk.steps) {
      rows.emplace_back(describe(ctx.permitted()[step.permitted], bq), describe(ctx.forbidden()[step.forbidden], bq));
    }
    std::rotate(rows.begin(), std::min_element(rows.begin(), rows.end()), rows.end());
    tables.push_back(std::move(rows));
  }
  std::sort(tables.begin(), tables.end());
  return tables;
}

Problems example_walk() {
  Problems p;
  const auto run = cli({"ag", fixture_path("e1.quiver")});
  expect(p, run.code == 0 && run.out == "1 0 1\n4 5 1\n", "ag output was '" + run.out + "'");
  std::vector<std::vector<Row>> expected_tables{
      {{"h_5", "a3 a5"}, {"h_3", "a1"}, {"h_1", "a4 a2"}, {"a5", "p_5"}},
      {{"a2 a1 a3 a4", "p_2"}},
  };
  for (auto& rows : expected_tables) {
    std::rotate(rows.begin(), std::min_element(rows.begin(), rows.end()), rows.end());
  }
  std::sort(expected_tables.begin(), expected_tables.end());
  expect(p, walk_tables(parse_quiver(read_fixture("e1.quiver"))) == expected_tables, "walk tables differ");
  const auto trace = cli({"ag", "--trace", fixture_path("e1.quiver")});
  expect(p, trace.code == 0 && trace.out.find("a2 a1 a3 a4 | p_2") != std::string::npos, "trace output");
  return p;
}

Problems a7_disc() {
  Problems p;
  const auto a = parse_angulation(read_fixture("d2.ang"));
  const auto q = build_quiver(a);
  const auto built = cli({"build", fixture_path("d2.ang")});
  expect(p, built.out == serialize_quiver(q), "build output differs from the library");
  const std::vector<std::pair<std::string, std::pair<std::string, std::string>>> arrows{
      {"t1+", {"t1", "t2"}}, {"t2+", {"t2", "t3"}}, {"t4-", {"t4", "t3"}},
      {"t5-", {"t5", "t4"}}, {"t5+", {"t5", "t6"}}, {"t6+", {"t6", "t7"}}};
  expect(p, q.vertex_count() == 7 && q.arrow_count() == arrows.size(), "not seven vertices and six arrows");
  for (const auto& [id, ends] : arrows) {
    const auto found = built.out.find("arrow " + id + " " + ends.first + " " + ends.second + "\n");
    expect(p, found != std::string::npos, "missing arrow " + id);
  }
  expect(p, q.relations().size() == 2, "relation count");
  expect(p, built.out.find("relation t1+ t2+\n") != std::string::npos, "missing relation t1+ t2+");
  expect(p, built.out.find("relation t5+ t6+\n") != std::string::npos, "missing relation t5+ t6+");
  expect(p, ag_invariant_formula(a) == pairs({{8, 6}}), "formula " + brief(ag_invariant_formula(a)));
  expect(p, ag_invariant_direct(q) == pairs({{8, 6}}), "direct " + brief(ag_invariant_direct(q)));
  expect(p, cli({"ag", "-"}, built.out).out == "8 6 1\n", "ag on the built quiver");
  return p;
}

Problems annulus() {
  Problems p;
  const auto a = parse_angulation(read_fixture("ann.ang"));
  const auto q = build_quiver(a);
  expect(p, q.vertex_count() == 3 && q.arrow_count() == 2 && q.relations().size() == 1, "quiver shape");
  expect(p, connected_components(q).size() == 1, "quiver not connected");
  expect(p, ag_invariant_formula(a) == pairs({{4, 2}}), "formula " + brief(ag_invariant_formula(a)));
  expect(p, naive_per_component(a) == pairs({{2, 2}, {2, 4}}), "naive " + brief(naive_per_component(a)));
  const auto b = remove_boundary_bridges(a);
  expect(p, b.components().size() == 1 && b.components().front().points.size() == 10, "bridged surface");
  expect(p, ag_invariant_direct(q) == pairs({{4, 2}}), "direct " + brief(ag_invariant_direct(q)));
  return p;
}

Problems hexagon() {
  Problems p;
  const auto a = parse_angulation(read_fixture("hex.ang"));
  const auto expected = pairs({{3, 0}, {0, 3}});
  expect(p, internal_faces(a) == 1, "internal face count");
  expect(p, ag_invariant_formula(a) == expected, "formula " + brief(ag_invariant_formula(a)));
  expect(p, ag_invariant_direct(build_quiver(a)) == expected, "direct");
  return p;
}

Problems inflation() {
  Problems p;
  const auto partial = parse_partial(read_fixture("p1.ang"));
  const auto q = build_quiver_partial(partial);
  for (int m = 2; m <= 6; ++m) {
    const auto a = inflate(partial, m);
    expect(p, build_quiver(a) == q, "quiver differs for m=" + std::to_string(m));
    expect(p, ag_invariant_formula(a) == pairs({{5, 3}}), "formula for m=" + std::to_string(m));
  }
  const auto a = inflate(partial, 3);
  const auto before = partial.surface().point_count();
  expect(p, a.surface().point_count() == before + 9, "point count after inflate(3)");
  std::vector<std::size_t> added;
  for (std::size_t f = 0; f < a.faces().size(); ++f) {
    added.push_back(a.faces()[f].walk.size() - partial.surface().faces[f].walk.size());
  }
  expect(p, added == std::vector<std::size_t>{2, 2, 1, 2, 2}, "points per run");
  return p;
}

struct Drawn {
  Angulation a;
  std::string name;
};

// Plain instances without isolated vertices, drawn until `count` are found.
std::vector<Drawn> property_instances(std::size_t count) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> pick_m(1, 4);
  std::uniform_int_distribution<std::size_t> pick_arcs(1, 12);
  std::vector<Drawn> out;
  while (out.size() < count) {
    const int m = pick_m(rng);
    const auto arcs = pick_arcs(rng);
    const auto seed = rng();
    auto a = random_disc_angulation(m, arcs, seed);
    if (!isolated_vertices(build_quiver(a)).empty()) {
      continue;
    }
    out.push_back({std::move(a), "gen --m " + std::to_string(m) + " --arcs " + std::to_string(arcs) + " --seed " +
                                     std::to_string(seed)});
  }
  return out;
}

Problems properties(const std::vector<Drawn>& instances) {
  Problems p;
  for (const auto& d : instances) {
    for (const auto& f : check_angulation(d.a).failures) {
      p.push_back(d.name + ": " + f);
    }
  }
  return p;
}

Problems mutations(std::size_t count) {
  Problems p;
  std::mt19937_64 rng(977);
  std::uniform_int_distribution<int> pick_m(2, 4);
  std::uniform_int_distribution<std::size_t> pick_arcs(1, 12);
  std::size_t done = 0;
  while (done < count) {
    const auto base = random_disc_angulation(pick_m(rng), pick_arcs(rng), rng());
    const auto mutation = derive_mutation(base, rng());
    if (!mutation) {
      continue;
    }
    ++done;
    for (const auto& f : check_mutation(*mutation)) {
      p.push_back(mutation->description + ": " + f);
    }
  }
  return p;
}

Problems signs(const std::vector<Drawn>& instances) {
  Problems p;
  for (const auto& d : instances) {
    const auto q = build_quiver(d.a);
    try {
      const auto base = assign_signs(q);
      const auto direct = ag_invariant_direct(q, base);
      const auto component = component_of_vertices(q);
      const auto parts = *std::max_element(component.begin(), component.end()) + 1;
      for (std::size_t c = 0; c < parts; ++c) {
        std::vector<bool> mask(component.size());
        for (std::size_t v = 0; v < component.size(); ++v) {
          mask[v] = component[v] == c;
        }
        const auto flipped = negate_on(q, base, mask);
        expect(p, sign_violations(q, flipped).empty(), d.name + ": flipped signs invalid");
        expect(p, ag_invariant_direct(q, flipped) == direct, d.name + ": value changed by a flip");
      }
    } catch (const SignConflict& e) {
      p.push_back(d.name + ": " + e.what());
    }
  }
  return p;
}

Problems divergence() {
  Problems p;
  const std::string single = "angulation disc\nm 2\npoints 6\narc t1 0 3\n";
  const auto a = parse_angulation(single);
  expect(p, ag_invariant_formula(a) == pairs({{2, 0}}), "formula " + brief(ag_invariant_formula(a)));
  expect(p, ag_invariant_direct(build_quiver(a)) == pairs({{1, 0}}), "direct");
  const auto run = cli({"verify", "-"}, single);
  expect(p, run.code == exit_code::divergence, "verify exit " + std::to_string(run.code));
  expect(p, run.out.find("documented divergence (isolated vertices)") != std::string::npos, "verify label");
  return p;
}

} // namespace

int main() {
  const auto instances = property_instances(500);
  const std::vector<std::pair<std::string, std::function<Problems()>>> criteria{
      {"worked example E1: invariant and walk tables", example_walk},
      {"A7 disc D2: quiver, formula and direct value", a7_disc},
      {"annulus ANN: bridging, formula and naive value", annulus},
      {"hexagon HEX: internal face", hexagon},
      {"inflation of P1 for m = 2..6", inflation},
      {"500 random discs: oracle properties", [&] { return properties(instances); }},
      {"100 inverse-bridge mutations", [] { return mutations(100); }},
      {"sign flips and sign assignment on the 500 discs", [&] { return signs(instances); }},
      {"single-arc disc: documented divergence", divergence},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Problems problems;
    try {
      problems = criteria[i].second();
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (problems.empty() ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first;
    if (!problems.empty()) {
      ++failed;
      std::cout << " (" << problems.size() << " problems; first: " << problems.front() << ")";
    }
    std::cout << "\n";
  }
  return failed == 0 ? 0 : 1;
}
