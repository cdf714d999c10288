#include "agi/angulation_io.hpp"
#include "agi/error.hpp"
#include "agi/generate.hpp"
#include "agi/quiver_from_angulation.hpp"
#include "agi/threads.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quivers.hpp"

#include <doctest.h>

using namespace agi;
using Keys = std::set<std::string>;

TEST_CASE("threads of the five-vertex example") {
  const auto bq = parse_quiver(read_fixture("e1.quiver"));
  CHECK(oracle::keys(permitted_threads(bq), bq) == Keys{"a2 a1 a3 a4", "a5", "h_1", "h_3", "h_5"});
  CHECK(oracle::keys(forbidden_threads(bq), bq) == Keys{"a4 a2", "a3 a5", "a1", "p_2", "p_5"});
  CHECK(full_relation_cycles(bq).empty());
}

TEST_CASE("threads of the A7 quiver built from the 18-gon") {
  const auto bq = build_quiver(parse_angulation(read_fixture("d2.ang")));
  // a1 = t1+, a2 = t2+, a3 = t4-, a4 = t5-, a5 = t5+, a6 = t6+.
  CHECK(oracle::keys(permitted_threads(bq), bq) ==
        Keys{"t5- t4-", "h_t1", "t1+", "t2+", "h_t4", "t5+", "t6+", "h_t7"});
  CHECK(oracle::keys(forbidden_threads(bq), bq) ==
        Keys{"t1+ t2+", "t4-", "t5-", "t5+ t6+", "p_t1", "p_t2", "p_t6", "p_t7"});
}

TEST_CASE("a single vertex has one trivial thread of each kind") {
  BoundQuiver bq;
  bq.add_vertex("x");
  CHECK(oracle::keys(permitted_threads(bq), bq) == Keys{"h_x"});
  CHECK(oracle::keys(forbidden_threads(bq), bq) == Keys{"p_x"});
}

TEST_CASE("full-relation triangle") {
  const auto bq = full_relation_triangle();
  CHECK(oracle::keys(permitted_threads(bq), bq) == Keys{"a", "b", "c"});
  CHECK(oracle::keys(forbidden_threads(bq), bq) == Keys{"a b c", "b c a", "c a b", "p_1", "p_2", "p_3"});
  for (const auto& t : forbidden_threads(bq)) {
    CHECK(t.wraps_cycle == !t.trivial());
  }
  const auto cycles = full_relation_cycles(bq);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles.front().arrows == std::vector<ArrowIndex>{0, 1, 2});
}

TEST_CASE("thread enumeration agrees with brute force on generated quivers") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto bq = build_quiver(random_disc_angulation(1 + static_cast<int>(seed % 4), seed % 10, seed));
    const auto expected = oracle::brute_force_threads(bq);
    CHECK(oracle::keys(permitted_threads(bq), bq) == expected.permitted);
    CHECK(oracle::keys(forbidden_threads(bq), bq) == expected.forbidden);
  }
  for (const auto& bq : {parse_quiver(read_fixture("e1.quiver")), full_relation_triangle(), a2_quiver()}) {
    const auto expected = oracle::brute_force_threads(bq);
    CHECK(oracle::keys(permitted_threads(bq), bq) == expected.permitted);
    CHECK(oracle::keys(forbidden_threads(bq), bq) == expected.forbidden);
  }
}

TEST_CASE("every arrow lies in one permitted thread and in one forbidden thread or cycle") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto bq = build_quiver(random_disc_angulation(1 + static_cast<int>(seed % 3), seed % 12, seed));
    std::vector<int> permitted(bq.arrow_count(), 0);
    std::vector<int> forbidden(bq.arrow_count(), 0);
    for (const auto& t : permitted_threads(bq)) {
      for (auto a : t.arrows) {
        ++permitted[a];
      }
    }
    for (const auto& t : forbidden_threads(bq)) {
      if (!t.wraps_cycle) {
        for (auto a : t.arrows) {
          ++forbidden[a];
        }
      }
    }
    for (const auto& c : full_relation_cycles(bq)) {
      for (auto a : c.arrows) {
        ++forbidden[a];
      }
    }
    CHECK(std::all_of(permitted.begin(), permitted.end(), [](int n) { return n == 1; }));
    CHECK(std::all_of(forbidden.begin(), forbidden.end(), [](int n) { return n == 1; }));
  }
}

TEST_CASE("signs of the five-vertex example") {
  const auto bq = parse_quiver(read_fixture("e1.quiver"));
  const auto signs = assign_signs(bq);
  CHECK(sign_violations(bq, signs).empty());
  const auto a = [&](const char* id) { return *bq.find_arrow(id); };
  CHECK(signs.sigma[a("a1")] == Sign::positive);
  CHECK(signs.epsilon[a("a2")] == Sign::negative);
  CHECK(signs.sigma[a("a4")] == -signs.sigma[a("a5")]);
  CHECK(signs.epsilon[a("a4")] == signs.sigma[a("a2")]);

  const auto permitted = permitted_threads(bq);
  const auto forbidden = forbidden_threads(bq);
  auto sigma = [&](const std::vector<Thread>& ts, const char* name) {
    return to_int(sigma_of(ts[thread_index(ts, bq, name)], bq, signs));
  };
  auto epsilon = [&](const std::vector<Thread>& ts, const char* name) {
    return to_int(epsilon_of(ts[thread_index(ts, bq, name)], bq, signs));
  };
  CHECK(sigma(permitted, "h_1") == -1);
  CHECK(epsilon(permitted, "h_1") == 1);
  CHECK(sigma(permitted, "h_3") == -1);
  CHECK(epsilon(permitted, "h_3") == 1);
  CHECK(sigma(permitted, "h_5") == 1);
  CHECK(epsilon(permitted, "h_5") == -1);
  CHECK(sigma(permitted, "a2 a1 a3 a4") == 1);
  CHECK(sigma(forbidden, "p_2") == -1);
  CHECK(epsilon(forbidden, "p_2") == -1);
  CHECK(sigma(forbidden, "p_5") == -1);
  CHECK(epsilon(forbidden, "p_5") == -1);
}

TEST_CASE("two arrows out of one vertex get opposite sigma") {
  BoundQuiver bq;
  for (auto v : {"0", "1", "2"}) {
    bq.add_vertex(v);
  }
  bq.add_arrow("a", "0", "1");
  bq.add_arrow("b", "0", "2");
  const auto signs = assign_signs(bq);
  CHECK(signs.sigma[0] == -signs.sigma[1]);
}

TEST_CASE("negating every sign of a component keeps the assignment valid") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto bq = build_quiver(random_disc_angulation(1 + static_cast<int>(seed % 4), seed % 12, seed));
    const auto signs = assign_signs(bq);
    REQUIRE(sign_violations(bq, signs).empty());
    const auto label = component_of_vertices(bq);
    std::vector<bool> mask(bq.vertex_count());
    for (VertexIndex v = 0; v < bq.vertex_count(); ++v) {
      mask[v] = label[v] == 0;
    }
    CHECK(sign_violations(bq, negate_on(bq, signs, mask)).empty());
    CHECK(sign_violations(bq, negate_on(bq, signs, std::vector<bool>(bq.vertex_count(), true))).empty());
  }
}

TEST_CASE("the deterministic assignment is one of the brute-force solutions") {
  for (const auto& bq : {parse_quiver(read_fixture("e1.quiver")), full_relation_triangle(), a2_quiver()}) {
    const auto all = oracle::all_sign_assignments(bq);
    CHECK_FALSE(all.empty());
    CHECK(std::find(all.begin(), all.end(), assign_signs(bq)) != all.end());
    for (const auto& s : all) {
      CHECK(sign_violations(bq, s).empty());
    }
  }
}

TEST_CASE("contradictory constraints raise SignConflict") {
  // a and b are parallel, so their epsilons differ; both relations then
  // force sigma(c) to equal each of them.
  BoundQuiver bq;
  for (auto v : {"0", "1", "2"}) {
    bq.add_vertex(v);
  }
  bq.add_arrow("a", "0", "1");
  bq.add_arrow("b", "0", "1");
  bq.add_arrow("c", "1", "2");
  bq.add_relation("a", "c");
  bq.add_relation("b", "c");
  CHECK_THROWS_AS(assign_signs(bq), SignConflict);
}

TEST_CASE("a permitted cycle is not gentle") {
  BoundQuiver bq;
  bq.add_vertex("0");
  bq.add_vertex("1");
  bq.add_arrow("a", "0", "1");
  bq.add_arrow("b", "1", "0");
  CHECK_THROWS_AS(permitted_threads(bq), NotGentle);
}
