#include "agi/angulation_io.hpp"
#include "agi/batch.hpp"
#include "agi/bridging.hpp"
#include "agi/generate.hpp"

#include "fixtures.hpp"

#include <doctest.h>

using namespace agi;

TEST_CASE("serial and parallel runners agree") {
  FuzzOptions options;
  options.count = 60;
  options.mutations = 20;
  const auto specs = make_specs(options);
  const auto serial = run_batch_serial(specs);
  const auto parallel = run_batch_parallel(specs);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].spec.index == parallel[i].spec.index);
    CHECK(serial[i].outcome == parallel[i].outcome);
    CHECK(serial[i].failures == parallel[i].failures);
  }
}

TEST_CASE("specs are deterministic and respect the ranges") {
  FuzzOptions options;
  options.count = 50;
  options.mutations = 10;
  options.m_min = 2;
  options.m_max = 3;
  options.arcs_max = 6;
  const auto a = make_specs(options);
  const auto b = make_specs(options);
  REQUIRE(a.size() == 60);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].seed == b[i].seed);
    CHECK(a[i].m >= 2);
    CHECK(a[i].m <= 3);
    CHECK(a[i].arcs <= 6);
    CHECK(a[i].mutate == (i >= 50));
  }
}

TEST_CASE("an empty run reports nothing") {
  FuzzOptions options;
  options.count = 0;
  options.mutations = 0;
  const auto report = fuzz(options);
  CHECK(report.results.empty());
  CHECK(report.failed == 0);
}

TEST_CASE("verification classifies the single-arc disc as documented") {
  const auto a = random_disc_angulation(2, 1, 1);
  const auto v = verify_angulation(a);
  CHECK(v.isolated == 1);
  CHECK(v.agreement == Agreement::documented);
  CHECK(verify_angulation(parse_angulation(read_fixture("ann.ang"))).agreement == Agreement::match);
}

TEST_CASE("the divergence rule is exact") {
  AgFunction direct;
  direct.add(1, 0, 2);
  direct.add(4, 3);
  AgFunction formula;
  formula.add(2, 0, 2);
  formula.add(4, 3);
  CHECK(is_documented_divergence(formula, direct, 2));
  CHECK_FALSE(is_documented_divergence(formula, direct, 1));
  CHECK_FALSE(is_documented_divergence(formula, direct, 0));
  formula.add(4, 3);
  CHECK_FALSE(is_documented_divergence(formula, direct, 2));
}

TEST_CASE("mutation checks notice a changed quiver or value") {
  const auto base = random_disc_angulation(3, 5, 9);
  const auto mutation = derive_mutation(base, 4);
  REQUIRE(mutation);
  CHECK(check_mutation(*mutation).empty());
  Mutation broken = *mutation;
  broken.after = random_disc_angulation(3, 5, 10);
  CHECK_FALSE(check_mutation(broken).empty());
  CHECK_FALSE(derive_mutation(random_disc_angulation(1, 5, 9), 4));
}

TEST_CASE("check_angulation passes on the fixtures") {
  for (const char* name : {"d2.ang", "ann.ang", "hex.ang", "fourcpts.ang"}) {
    const auto outcome = check_angulation(parse_angulation(read_fixture(name)));
    CHECK(outcome.failures.empty());
    CHECK(outcome.isolated == 0);
  }
}

TEST_CASE("shrinking removes ears while the predicate holds") {
  const auto a = random_disc_angulation(2, 9, 3);
  const auto start = *as_disc_diagonals(a);
  // Keep instances with at least three arcs: shrinking stops at exactly three.
  const auto small = shrink(start, [](const DiscDiagonals& d) { return d.arcs.size() >= 3; });
  CHECK(small.arcs.size() == 3);
  CHECK(small.points == 3 * 2 + 2 + 2);
  CHECK_NOTHROW(from_disc_diagonals(small));
}

TEST_CASE("removing an ear keeps a valid angulation") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = random_disc_angulation(1 + static_cast<int>(seed % 4), 1 + seed % 8, seed);
    const auto d = *as_disc_diagonals(a);
    std::size_t ears = 0;
    for (std::size_t i = 0; i < d.arcs.size(); ++i) {
      if (const auto smaller = remove_ear(d, i)) {
        ++ears;
        CHECK(smaller->arcs.size() == d.arcs.size() - 1);
        CHECK_NOTHROW(from_disc_diagonals(*smaller));
      }
    }
    CHECK(ears >= 1);
  }
}

TEST_CASE("the report lists counts") {
  FuzzOptions options;
  options.count = 20;
  options.mutations = 5;
  const auto text = format_report(fuzz(options));
  CHECK(text.starts_with("instances 25\n"));
  CHECK(text.find("failed 0\n") != std::string::npos);
}
