#include "agi/batch.hpp"

#include "agi/ag_direct.hpp"
#include "agi/angulation_io.hpp"
#include "agi/bridging.hpp"
#include "agi/error.hpp"
#include "agi/generate.hpp"
#include "agi/quiver_from_angulation.hpp"
#include "agi/threads.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace agi {

bool is_documented_divergence(const AgFunction& formula, const AgFunction& direct, std::size_t k) {
  if (k == 0) {
    return false;
  }
  const int kk = static_cast<int>(k);
  if (direct(1, 0) < kk) {
    return false;
  }
  AgFunction expected;
  for (const auto& [pair, count] : direct.pairs()) {
    expected.add(pair.first, pair.second, pair == AgFunction::Pair{1, 0} ? count - kk : count);
  }
  expected.add(2, 0, kk);
  return expected == formula;
}

Verification verify_angulation(const Angulation& a) {
  Verification v;
  const auto q = build_quiver(a);
  v.formula = ag_invariant_formula(a);
  v.direct = ag_invariant_direct(q);
  v.isolated = isolated_vertices(q).size();
  if (v.formula == v.direct) {
    v.agreement = Agreement::match;
  } else if (is_documented_divergence(v.formula, v.direct, v.isolated)) {
    v.agreement = Agreement::documented;
  } else {
    v.agreement = Agreement::mismatch;
  }
  return v;
}

namespace {

std::string thread_key(const Thread& t, const BoundQuiver& bq) {
  if (t.trivial()) {
    return "p_" + bq.vertex(t.start);
  }
  std::string key;
  for (ArrowIndex a : t.arrows) {
    key += bq.arrow(a).id + " ";
  }
  return key;
}

// Forbidden thread read off the arc run of a face: the arrows at its corners.
std::string face_thread_key(const MarkedSurface& s, const Face& face) {
  const auto runs = arc_runs(face);
  if (runs.size() != 1) {
    return "<face " + face.id + " has " + std::to_string(runs.size()) + " arc runs>";
  }
  const auto& run = runs.front();
  if (run.length == 1) {
    return "p_" + s.arcs[std::get<ArcTraversal>(face.walk[run.start]).arc].id;
  }
  std::string key;
  for (std::size_t i = 0; i + 1 < run.length; ++i) {
    const auto& t = std::get<ArcTraversal>(face.walk[(run.start + i) % face.walk.size()]);
    key += corner_arrow_id(s.arcs[t.arc], t.reversed) + " ";
  }
  return key;
}

} // namespace

CheckOutcome check_angulation(const Angulation& a) {
  CheckOutcome out;
  auto fail = [&out](std::string message) { out.failures.push_back(std::move(message)); };

  const auto bridged = remove_boundary_bridges(a);
  const auto q = build_quiver(a);
  out.isolated = isolated_vertices(q).size();
  if (const auto violations = validate_gentle(q); !violations.empty()) {
    fail("built quiver is not gentle: " + to_string(violations.front()));
    return out;
  }
  SignAssignment signs;
  try {
    signs = assign_signs(q);
  } catch (const SignConflict& e) {
    fail(std::string("sign conflict: ") + e.what());
    return out;
  }
  if (const auto bad = sign_violations(q, signs); !bad.empty()) {
    fail("sign assignment breaks " + bad.front());
  }
  const PairingContext ctx(q, signs);
  const auto trace = trace_ag(ctx);
  const auto& direct = trace.result;
  const auto formula = ag_invariant_formula(a);

  if (out.isolated > 0) {
    if (!is_documented_divergence(formula, direct, out.isolated)) {
      fail("formula " + brief(formula) + " vs direct " + brief(direct) + " beyond the isolated-vertex divergence");
    }
    return out;
  }
  if (formula != direct) {
    fail("formula " + brief(formula) + " != direct " + brief(direct));
  }

  const auto& s = bridged.surface();
  std::size_t marked = 0;
  for (const auto& points : marked_points_on_arcs(s)) {
    marked += points.size();
  }
  if (ctx.permitted().size() != marked) {
    fail("|H| = " + std::to_string(ctx.permitted().size()) + " but #M_T = " + std::to_string(marked));
  }

  std::map<std::string, int> forbidden;
  std::size_t open_forbidden = 0;
  for (const auto& f : ctx.forbidden()) {
    if (!f.wraps_cycle) {
      ++forbidden[thread_key(f, q)];
      ++open_forbidden;
    }
  }
  const auto segments = boundary_segments(s);
  if (open_forbidden != segments.size()) {
    fail("|F| = " + std::to_string(open_forbidden) + " but |B| = " + std::to_string(segments.size()));
  }
  for (const auto& segment : segments) {
    const auto& face = s.faces[segment.face];
    const auto key = face_thread_key(s, face);
    auto it = forbidden.find(key);
    if (it == forbidden.end() || it->second == 0) {
      fail("segment in face " + face.id + " has no forbidden thread `" + key + "`");
      continue;
    }
    --it->second;
    const int length = key.starts_with("p_") ? 0 : static_cast<int>(std::count(key.begin(), key.end(), ' '));
    if (length != bridged.m() - segment.weight) {
      fail("face " + face.id + ": l(F) = " + std::to_string(length) + " but m - w = " +
           std::to_string(bridged.m() - segment.weight));
    }
  }

  if (direct.sum_first() != static_cast<int>(ctx.permitted().size())) {
    fail("sum of first components " + std::to_string(direct.sum_first()) + " != |H|");
  }
  if (direct.sum_second() != static_cast<int>(q.arrow_count())) {
    fail("sum of second components " + std::to_string(direct.sum_second()) + " != |Q_1|");
  }

  const auto component = component_of_vertices(q);
  const std::size_t components = component.empty() ? 0 : *std::max_element(component.begin(), component.end()) + 1;
  for (std::size_t c = 0; c < components; ++c) {
    std::vector<bool> mask(q.vertex_count());
    for (VertexIndex v = 0; v < q.vertex_count(); ++v) {
      mask[v] = component[v] == c;
    }
    const auto flipped = negate_on(q, signs, mask);
    if (!sign_violations(q, flipped).empty()) {
      fail("negated signs on component " + std::to_string(c) + " are invalid");
    } else if (ag_invariant_direct(q, flipped) != direct) {
      fail("negating signs on component " + std::to_string(c) + " changes the direct value");
    }
  }
  return out;
}

std::optional<Mutation> derive_mutation(const Angulation& base, std::uint64_t seed) {
  const int m = base.m();
  if (m < 2) {
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  auto below = [&rng](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  Mutation out{base, base, ""};
  if (below(3) == 0) {
    const auto second = random_disc_angulation(m, 1 + below(5), rng());
    out.before = disjoint_union(base, second);
    out.description = "union with a second disc; ";
  }
  out.after = out.before;
  const std::size_t merges = 1 + below(2);
  std::size_t done = 0;
  for (std::size_t step = 0; step < merges; ++step) {
    const auto& faces = out.after.faces();
    std::vector<std::size_t> eligible;
    for (std::size_t f = 0; f < faces.size(); ++f) {
      if (boundary_runs(faces[f]).size() == 1 && arc_runs(faces[f]).size() == 1) {
        eligible.push_back(f);
      }
    }
    std::shuffle(eligible.begin(), eligible.end(), rng);
    const std::size_t most = static_cast<std::size_t>(m + 2) / 2;
    const std::size_t target = 2 + below(most - 1);
    std::vector<std::size_t> chosen;
    std::size_t budget = static_cast<std::size_t>(m) + 2;
    for (std::size_t f : eligible) {
      if (chosen.size() == target) {
        break;
      }
      const std::size_t cost = arc_runs(faces[f]).front().length + 1;
      const std::size_t reserve = 2 * (target - chosen.size() - 1);
      if (cost + reserve <= budget) {
        chosen.push_back(f);
        budget -= cost;
      }
    }
    if (chosen.size() < 2) {
      break;
    }
    std::vector<int> weights(chosen.size(), 0);
    for (std::size_t left = budget; left > 0; --left) {
      ++weights[below(chosen.size())];
    }
    std::ostringstream text;
    text << "merge";
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      text << ' ' << faces[chosen[i]].id << '/' << weights[i];
    }
    out.after = merge_inverse_bridge(out.after, chosen, weights);
    out.description += text.str() + "; ";
    ++done;
  }
  if (done == 0) {
    return std::nullopt;
  }
  out.description.resize(out.description.size() - 2);
  return out;
}

std::vector<std::string> check_mutation(const Mutation& mutation) {
  std::vector<std::string> failures;
  const auto quiver = build_quiver(mutation.before);
  if (build_quiver(mutation.after) != quiver) {
    failures.emplace_back("merging changed the quiver");
  }
  const auto bridged = remove_boundary_bridges(mutation.after);
  if (build_quiver(bridged) != quiver) {
    failures.emplace_back("bridging changed the quiver");
  }
  if (is_degenerate(bridged)) {
    failures.emplace_back("bridged surface is still degenerate");
  }
  if (remove_boundary_bridges(bridged) != bridged) {
    failures.emplace_back("bridging is not idempotent");
  }
  const auto before = ag_invariant_formula(mutation.before);
  const auto after = ag_invariant_formula(mutation.after);
  if (before != after) {
    failures.push_back("formula changed from " + brief(before) + " to " + brief(after));
  }
  return failures;
}

std::string_view name(Outcome outcome) {
  switch (outcome) {
  case Outcome::passed:
    return "passed";
  case Outcome::documented:
    return "documented";
  case Outcome::skipped:
    return "skipped";
  case Outcome::failed:
    return "failed";
  }
  return "?";
}

namespace {

std::uint64_t mutation_seed(const InstanceSpec& spec) { return mix_seed(spec.seed, 1); }

// Failures of one instance built on `base`; nullopt when the mutation is infeasible.
std::optional<CheckOutcome> run_checks(const InstanceSpec& spec, const Angulation& base) {
  if (!spec.mutate) {
    return check_angulation(base);
  }
  const auto mutation = derive_mutation(base, mutation_seed(spec));
  if (!mutation) {
    return std::nullopt;
  }
  auto outcome = check_angulation(mutation->after);
  for (auto& f : check_mutation(*mutation)) {
    outcome.failures.push_back(std::move(f));
  }
  return outcome;
}

} // namespace

InstanceResult check_instance(const InstanceSpec& spec) {
  InstanceResult result{spec, Outcome::passed, {}, {}};
  try {
    const auto base = random_disc_angulation(spec.m, spec.arcs, spec.seed);
    const auto outcome = run_checks(spec, base);
    if (!outcome) {
      result.outcome = Outcome::skipped;
    } else if (!outcome->failures.empty()) {
      result.outcome = Outcome::failed;
      result.failures = outcome->failures;
    } else if (outcome->isolated > 0) {
      result.outcome = Outcome::documented;
    }
  } catch (const std::exception& e) {
    result.outcome = Outcome::failed;
    result.failures.push_back(std::string("exception: ") + e.what());
  }
  return result;
}

std::vector<InstanceResult> run_batch_serial(const std::vector<InstanceSpec>& specs) {
  std::vector<InstanceResult> results;
  results.reserve(specs.size());
  for (const auto& spec : specs) {
    results.push_back(check_instance(spec));
  }
  return results;
}

std::vector<InstanceResult> run_batch_parallel(const std::vector<InstanceSpec>& specs) {
  std::vector<InstanceResult> results(specs.size());
  const auto n = static_cast<std::ptrdiff_t>(specs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    results[static_cast<std::size_t>(i)] = check_instance(specs[static_cast<std::size_t>(i)]);
  }
  return results;
}

std::vector<InstanceSpec> make_specs(const FuzzOptions& options) {
  if (options.m_min < 1 || options.m_max < options.m_min) {
    throw InfeasibleParameters("need 1 <= m-min <= m-max");
  }
  std::vector<InstanceSpec> specs;
  const std::size_t total = options.count + options.mutations;
  for (std::size_t i = 0; i < total; ++i) {
    const bool mutate = i >= options.count;
    const std::uint64_t seed = mix_seed(options.seed, i);
    std::mt19937_64 rng(seed);
    const int m_low = mutate ? std::max(options.m_min, 2) : options.m_min;
    const int m_high = std::max(m_low, options.m_max);
    const int m = std::uniform_int_distribution<int>(m_low, m_high)(rng);
    const std::size_t arcs_low = options.arcs_max == 0 ? 0 : 1;
    const std::size_t arcs = std::uniform_int_distribution<std::size_t>(arcs_low, options.arcs_max)(rng);
    specs.push_back({i, m, arcs, rng(), mutate});
  }
  return specs;
}

FuzzReport fuzz(const FuzzOptions& options) {
  const auto specs = make_specs(options);
  FuzzReport report;
  report.results = options.parallel ? run_batch_parallel(specs) : run_batch_serial(specs);
  for (auto& result : report.results) {
    switch (result.outcome) {
    case Outcome::passed:
      ++report.passed;
      break;
    case Outcome::documented:
      ++report.documented;
      break;
    case Outcome::skipped:
      ++report.skipped;
      break;
    case Outcome::failed: {
      ++report.failed;
      const auto& spec = result.spec;
      try {
        const auto base = random_disc_angulation(spec.m, spec.arcs, spec.seed);
        auto small = shrink(*as_disc_diagonals(base), [&spec](const DiscDiagonals& d) {
          try {
            const auto outcome = run_checks(spec, from_disc_diagonals(d));
            return outcome && !outcome->failures.empty();
          } catch (const std::exception&) {
            return true;
          }
        });
        result.reproducer = serialize_disc(from_disc_diagonals(small));
        if (spec.mutate) {
          result.reproducer += "# mutated with seed " + std::to_string(mutation_seed(spec)) + "\n";
        }
      } catch (const std::exception& e) {
        result.reproducer = std::string("# no reproducer: ") + e.what() + "\n";
      }
      break;
    }
    }
  }
  return report;
}

std::string format_report(const FuzzReport& report) {
  std::ostringstream out;
  out << "instances " << report.results.size() << '\n'
      << "passed " << report.passed << '\n'
      << "documented " << report.documented << '\n'
      << "skipped " << report.skipped << '\n'
      << "failed " << report.failed << '\n';
  for (const auto& result : report.results) {
    if (result.outcome != Outcome::failed) {
      continue;
    }
    const auto& spec = result.spec;
    out << "FAIL #" << spec.index << " m=" << spec.m << " arcs=" << spec.arcs << " seed=" << spec.seed
        << (spec.mutate ? " mutated" : "") << '\n';
    for (const auto& f : result.failures) {
      out << "  " << f << '\n';
    }
    std::istringstream lines(result.reproducer);
    for (std::string line; std::getline(lines, line);) {
      out << "  | " << line << '\n';
    }
  }
  return out.str();
}

} // namespace agi
