#include "agi/cli.hpp"

#include "agi/ag_direct.hpp"
#include "agi/angulation_io.hpp"
#include "agi/batch.hpp"
#include "agi/bridging.hpp"
#include "agi/error.hpp"
#include "agi/generate.hpp"
#include "agi/quiver_from_angulation.hpp"
#include "agi/threads.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace agi {

namespace {

class NoInput : public Error {
public:
  using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream text;
  if (path == "-") {
    text << in.rdbuf();
    return text.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw NoInput("cannot open " + path);
  }
  text << file.rdbuf();
  return text.str();
}

std::string sign_text(Sign s) { return s == Sign::positive ? "1" : "-1"; }

// Left-aligned columns separated by " | ".
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) {
        line += " | ";
      }
      line += row[i];
      if (i + 1 < row.size()) {
        line.append(width[i] - row[i].size(), ' ');
      }
    }
    out << line << '\n';
  }
  return out.str();
}

std::string thread_table(const char* title, const std::vector<Thread>& threads, const BoundQuiver& bq,
                         const SignAssignment& signs) {
  std::vector<std::vector<std::string>> rows{{title, "sigma", "epsilon"}};
  for (const auto& t : threads) {
    if (t.wraps_cycle) {
      rows.push_back({describe(t, bq) + " (cycle)", "", ""});
      continue;
    }
    rows.push_back({describe(t, bq), sign_text(sigma_of(t, bq, signs)), sign_text(epsilon_of(t, bq, signs))});
  }
  return table(rows);
}

std::string dot_quiver(const BoundQuiver& bq) {
  std::ostringstream out;
  out << "digraph quiver {\n  rankdir=LR;\n";
  for (const auto& v : bq.vertices()) {
    out << "  \"" << v << "\";\n";
  }
  for (const auto& arrow : bq.arrows()) {
    out << "  \"" << bq.vertex(arrow.source) << "\" -> \"" << bq.vertex(arrow.target) << "\" [label=\""
        << arrow.id << "\"];\n";
  }
  for (const auto& [a, b] : bq.relations()) {
    const auto& first = bq.arrow(a);
    const auto& second = bq.arrow(b);
    out << "  \"" << bq.vertex(first.source) << "\" -> \"" << bq.vertex(second.target)
        << "\" [style=dashed, arrowhead=none, constraint=false, label=\"" << first.id << ' ' << second.id
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

// Quiver of any input file: a quiver, an angulation or a partial triangulation.
BoundQuiver quiver_of(const std::string& text) {
  switch (detect_input_kind(text)) {
  case InputKind::quiver:
    return parse_quiver(text);
  case InputKind::angulation:
    return build_quiver(parse_angulation(text));
  case InputKind::partial: {
    const auto p = parse_partial(text);
    if (const auto problems = validate_partial(p); !problems.empty()) {
      throw ValidationError(problems);
    }
    return build_quiver_partial(p);
  }
  }
  return {};
}

int check(const std::string& text, std::ostream& out) {
  switch (detect_input_kind(text)) {
  case InputKind::quiver: {
    const auto bq = parse_quiver(text);
    out << "quiver: " << bq.vertex_count() << " vertices, " << bq.arrow_count() << " arrows, "
        << bq.relations().size() << " relations\n";
    const auto violations = validate_gentle(bq);
    for (const auto& v : violations) {
      out << "violation: " << to_string(v) << '\n';
    }
    out << (violations.empty() ? "gentle\n" : validate_string(bq).empty() ? "string, not gentle\n" : "not gentle\n");
    return violations.empty() ? exit_code::ok : exit_code::invalid_input;
  }
  case InputKind::angulation: {
    const auto a = parse_angulation(text);
    const auto& s = a.surface();
    out << "angulation: m=" << a.m() << ", " << a.point_count() << " points, " << s.components.size()
        << " boundary components, " << s.arcs.size() << " arcs, " << s.faces.size() << " faces\n";
    out << "euler characteristic " << euler_characteristic(s) << '\n';
    out << "internal faces " << internal_faces(s) << '\n';
    const auto degenerate = degenerate_faces(s);
    out << "degenerate " << (degenerate.empty() ? "no" : "yes");
    for (auto f : degenerate) {
      out << ' ' << s.faces[f].id;
    }
    out << '\n';
    for (const auto& w : warnings(s)) {
      out << "warning: " << w << '\n';
    }
    return exit_code::ok;
  }
  case InputKind::partial: {
    const auto p = parse_partial(text);
    out << "partial triangulation: " << p.surface().point_count() << " points, " << p.surface().arcs.size()
        << " arcs, " << p.surface().faces.size() << " faces\n";
    const auto problems = validate_partial(p);
    for (const auto& problem : problems) {
      out << "violation: " << problem << '\n';
    }
    return problems.empty() ? exit_code::ok : exit_code::invalid_input;
  }
  }
  return exit_code::ok;
}

Angulation angulation_of(const std::string& text) {
  if (detect_input_kind(text) != InputKind::angulation) {
    throw ParseError(0, "expected an angulation file");
  }
  return parse_angulation(text);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Derived invariant of gentle algebras, from quivers and from angulations"};
  app.name("agi");
  app.require_subcommand(1);

  std::string file;
  bool trace = false;
  bool naive = false;
  bool allow_isolated = false;
  bool disc = false;
  int m = 0;
  std::size_t arcs = 0;
  std::uint64_t seed = 0;
  FuzzOptions fuzz_options;
  bool serial = false;

  auto* check_cmd = app.add_subcommand("check", "Validate a quiver, angulation or partial triangulation");
  check_cmd->add_option("file", file, "Input file or -")->required();
  auto* threads_cmd = app.add_subcommand("threads", "Permitted and forbidden threads with signs");
  threads_cmd->add_option("file", file, "Quiver file or -")->required();
  auto* ag_cmd = app.add_subcommand("ag", "AG-invariant by the thread-pairing walk");
  ag_cmd->add_option("file", file, "Quiver file or -")->required();
  ag_cmd->add_flag("--trace", trace, "Print the walk tables");
  auto* build_cmd = app.add_subcommand("build", "Quiver with relations of an angulation or partial triangulation");
  build_cmd->add_option("file", file, "Angulation file or -")->required();
  auto* formula_cmd = app.add_subcommand("formula", "AG-invariant in closed form from an angulation");
  formula_cmd->add_option("file", file, "Angulation file or -")->required();
  formula_cmd->add_flag("--naive", naive, "Skip boundary-bridge removal (wrong on degenerate input)");
  auto* bridge_cmd = app.add_subcommand("bridge", "Remove boundary bridges");
  bridge_cmd->add_option("file", file, "Angulation file or -")->required();
  auto* verify_cmd = app.add_subcommand("verify", "Compare the closed form with the walk");
  verify_cmd->add_option("file", file, "Angulation file or -")->required();
  verify_cmd->add_flag("--allow-isolated", allow_isolated, "Exit 0 on the isolated-vertex divergence");
  auto* inflate_cmd = app.add_subcommand("inflate", "Inflate a partial triangulation to an (m+2)-angulation");
  inflate_cmd->add_option("file", file, "Partial triangulation file or -")->required();
  inflate_cmd->add_option("--m", m, "Target m (>= 2)")->required();
  auto* gen_cmd = app.add_subcommand("gen", "Random disc angulation");
  gen_cmd->add_option("--m", m, "m (>= 1)")->required();
  gen_cmd->add_option("--arcs", arcs, "Number of arcs")->required();
  gen_cmd->add_option("--seed", seed, "Seed")->required();
  gen_cmd->add_flag("--disc,!--surface", disc, "Write the disc format (default) or the surface format");
  disc = true;
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz text of the quiver of a file");
  dot_cmd->add_option("file", file, "Quiver or angulation file or -")->required();
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random cross-checks of both computations");
  fuzz_cmd->add_option("--count", fuzz_options.count, "Plain instances")->capture_default_str();
  fuzz_cmd->add_option("--mutations", fuzz_options.mutations, "Inverse-bridge mutations")->capture_default_str();
  fuzz_cmd->add_option("--m-min", fuzz_options.m_min, "Smallest m")->capture_default_str();
  fuzz_cmd->add_option("--m-max", fuzz_options.m_max, "Largest m")->capture_default_str();
  fuzz_cmd->add_option("--arcs-max", fuzz_options.arcs_max, "Most arcs per instance")->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz_options.seed, "Base seed")->capture_default_str();
  fuzz_cmd->add_flag("--serial", serial, "Use the single-threaded reference runner");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "agi: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) {
      err << sub->help();
    }
    if (app.get_subcommands().empty()) {
      err << app.help();
    }
    return exit_code::usage;
  }

  try {
    if (check_cmd->parsed()) {
      return check(read_input(file, in), out);
    }
    if (threads_cmd->parsed()) {
      const auto bq = quiver_of(read_input(file, in));
      const PairingContext ctx(bq);
      const auto& signs = ctx.signs();
      out << thread_table("H", ctx.permitted(), bq, signs) << '\n';
      out << thread_table("F", ctx.forbidden(), bq, signs) << '\n';
      out << "full-relation cycles\n";
      if (ctx.cycles().empty()) {
        out << "(none)\n";
      }
      for (const auto& cycle : ctx.cycles()) {
        for (std::size_t i = 0; i < cycle.arrows.size(); ++i) {
          out << (i == 0 ? "" : " ") << bq.arrow(cycle.arrows[i]).id;
        }
        out << '\n';
      }
      out << '\n';
      std::vector<std::vector<std::string>> rows{{"arrow", "sigma", "epsilon"}};
      for (ArrowIndex a = 0; a < bq.arrow_count(); ++a) {
        rows.push_back({bq.arrow(a).id, sign_text(signs.sigma[a]), sign_text(signs.epsilon[a])});
      }
      out << table(rows);
      return exit_code::ok;
    }
    if (ag_cmd->parsed()) {
      const auto bq = quiver_of(read_input(file, in));
      const PairingContext ctx(bq);
      const auto result = trace_ag(ctx);
      if (trace) {
        out << format_trace(result, ctx) << '\n';
      }
      out << result.result.to_string();
      return exit_code::ok;
    }
    if (build_cmd->parsed()) {
      out << serialize_quiver(quiver_of(read_input(file, in)));
      return exit_code::ok;
    }
    if (formula_cmd->parsed()) {
      const auto a = angulation_of(read_input(file, in));
      out << (naive ? naive_per_component(a) : ag_invariant_formula(a)).to_string();
      return exit_code::ok;
    }
    if (bridge_cmd->parsed()) {
      out << serialize_angulation(remove_boundary_bridges(angulation_of(read_input(file, in))));
      return exit_code::ok;
    }
    if (verify_cmd->parsed()) {
      const auto v = verify_angulation(angulation_of(read_input(file, in)));
      out << "formula " << brief(v.formula) << '\n' << "direct  " << brief(v.direct) << '\n';
      switch (v.agreement) {
      case Agreement::match:
        out << "match\n";
        return exit_code::ok;
      case Agreement::mismatch:
        out << "MISMATCH\n";
        return exit_code::mismatch;
      case Agreement::documented:
        out << "documented divergence (isolated vertices): " << v.isolated
            << (v.isolated == 1 ? " isolated quiver vertex gives" : " isolated quiver vertices each give")
            << " (1,0) in the walk but (2,0) in the closed form\n";
        return allow_isolated ? exit_code::ok : exit_code::divergence;
      }
    }
    if (inflate_cmd->parsed()) {
      const auto text = read_input(file, in);
      if (detect_input_kind(text) != InputKind::partial) {
        throw ParseError(0, "expected a partial triangulation file");
      }
      out << serialize_angulation(inflate(parse_partial(text), m));
      return exit_code::ok;
    }
    if (gen_cmd->parsed()) {
      const auto a = random_disc_angulation(m, arcs, seed);
      out << (disc ? serialize_disc(a) : serialize_angulation(a));
      return exit_code::ok;
    }
    if (dot_cmd->parsed()) {
      out << dot_quiver(quiver_of(read_input(file, in)));
      return exit_code::ok;
    }
    if (fuzz_cmd->parsed()) {
      fuzz_options.parallel = !serial;
      const auto report = fuzz(fuzz_options);
      out << format_report(report);
      return report.failed == 0 ? exit_code::ok : exit_code::mismatch;
    }
  } catch (const NoInput& e) {
    err << "agi: " << e.what() << '\n';
    return exit_code::no_input;
  } catch (const ParseError& e) {
    err << "agi: parse error: " << e.what() << '\n';
    return exit_code::invalid_input;
  } catch (const ValidationError& e) {
    err << "agi: invalid input:\n";
    for (const auto& problem : e.problems()) {
      err << "  " << problem << '\n';
    }
    return exit_code::invalid_input;
  } catch (const QuiverError& e) {
    err << "agi: invalid quiver: " << e.what() << '\n';
    return exit_code::invalid_input;
  } catch (const NotGentle& e) {
    err << "agi: not gentle: " << e.what() << '\n';
    return exit_code::invalid_input;
  } catch (const InfeasibleParameters& e) {
    err << "agi: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const std::exception& e) {
    err << "agi: internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
  return exit_code::usage;
}

} // namespace agi
