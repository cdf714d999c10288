#include "agi/quiver.hpp"

#include "agi/error.hpp"
#include "lines.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace agi {

VertexIndex BoundQuiver::add_vertex(std::string id) {
  if (vertex_index_.contains(id)) {
    throw QuiverError("duplicate vertex " + id);
  }
  const VertexIndex v = vertices_.size();
  vertex_index_.emplace(id, v);
  vertices_.push_back(std::move(id));
  outgoing_.emplace_back();
  incoming_.emplace_back();
  return v;
}

ArrowIndex BoundQuiver::add_arrow(std::string id, std::string_view source, std::string_view target) {
  auto s = find_vertex(source);
  auto t = find_vertex(target);
  if (!s) {
    throw QuiverError("unknown vertex " + std::string(source));
  }
  if (!t) {
    throw QuiverError("unknown vertex " + std::string(target));
  }
  return add_arrow(std::move(id), *s, *t);
}

ArrowIndex BoundQuiver::add_arrow(std::string id, VertexIndex source, VertexIndex target) {
  if (source >= vertices_.size() || target >= vertices_.size()) {
    throw QuiverError("arrow " + id + " has an endpoint outside the vertex set");
  }
  if (arrow_index_.contains(id)) {
    throw QuiverError("duplicate arrow " + id);
  }
  const ArrowIndex a = arrows_.size();
  arrow_index_.emplace(id, a);
  arrows_.push_back({std::move(id), source, target});
  outgoing_[source].push_back(a);
  incoming_[target].push_back(a);
  return a;
}

void BoundQuiver::add_relation(std::string_view first, std::string_view second) {
  auto a = find_arrow(first);
  auto b = find_arrow(second);
  if (!a) {
    throw QuiverError("unknown arrow " + std::string(first));
  }
  if (!b) {
    throw QuiverError("unknown arrow " + std::string(second));
  }
  add_relation(*a, *b);
}

void BoundQuiver::add_relation(ArrowIndex first, ArrowIndex second) {
  if (first >= arrows_.size() || second >= arrows_.size()) {
    throw QuiverError("relation refers to an unknown arrow");
  }
  if (!composable(first, second)) {
    throw QuiverError("relation " + arrows_[first].id + " " + arrows_[second].id +
                      " is not composable");
  }
  if (!relations_.insert({first, second}).second) {
    throw QuiverError("duplicate relation " + arrows_[first].id + " " + arrows_[second].id);
  }
}

std::optional<VertexIndex> BoundQuiver::find_vertex(std::string_view id) const {
  auto it = vertex_index_.find(std::string(id));
  if (it == vertex_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::optional<ArrowIndex> BoundQuiver::find_arrow(std::string_view id) const {
  auto it = arrow_index_.find(std::string(id));
  if (it == arrow_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::string_view name(Axiom axiom) {
  switch (axiom) {
  case Axiom::G1: return "G1";
  case Axiom::G2: return "G2";
  case Axiom::G3: return "G3";
  case Axiom::G4: return "G4";
  }
  return "?";
}

std::string to_string(const Violation& v) {
  return std::string(name(v.axiom)) + " at " + v.where + ": " + v.detail;
}

namespace {

void check_g1(const BoundQuiver& bq, std::vector<Violation>& out) {
  for (VertexIndex v = 0; v < bq.vertex_count(); ++v) {
    const auto outs = bq.outgoing(v).size();
    const auto ins = bq.incoming(v).size();
    if (outs > 2 || ins > 2) {
      std::ostringstream detail;
      detail << outs << " outgoing and " << ins << " incoming arrows";
      out.push_back({Axiom::G1, bq.vertex(v), detail.str()});
    }
  }
}

void check_g3(const BoundQuiver& bq, std::vector<Violation>& out) {
  for (ArrowIndex b = 0; b < bq.arrow_count(); ++b) {
    const auto& arrow = bq.arrow(b);
    std::size_t before = 0;
    for (ArrowIndex a : bq.incoming(arrow.source)) {
      before += bq.has_relation(a, b) ? 1 : 0;
    }
    std::size_t after = 0;
    for (ArrowIndex c : bq.outgoing(arrow.target)) {
      after += bq.has_relation(b, c) ? 1 : 0;
    }
    if (before > 1) {
      out.push_back({Axiom::G3, arrow.id, std::to_string(before) + " arrows a with a*" + arrow.id + " in I"});
    }
    if (after > 1) {
      out.push_back({Axiom::G3, arrow.id, std::to_string(after) + " arrows c with " + arrow.id + "*c in I"});
    }
  }
}

void check_g4(const BoundQuiver& bq, std::vector<Violation>& out) {
  for (ArrowIndex b = 0; b < bq.arrow_count(); ++b) {
    const auto& arrow = bq.arrow(b);
    std::size_t before = 0;
    for (ArrowIndex a : bq.incoming(arrow.source)) {
      before += bq.has_relation(a, b) ? 0 : 1;
    }
    std::size_t after = 0;
    for (ArrowIndex c : bq.outgoing(arrow.target)) {
      after += bq.has_relation(b, c) ? 0 : 1;
    }
    if (before > 1) {
      out.push_back({Axiom::G4, arrow.id, std::to_string(before) + " arrows a with a*" + arrow.id + " not in I"});
    }
    if (after > 1) {
      out.push_back({Axiom::G4, arrow.id, std::to_string(after) + " arrows c with " + arrow.id + "*c not in I"});
    }
  }
}

} // namespace

std::vector<Violation> validate_gentle(const BoundQuiver& bq) {
  std::vector<Violation> out;
  check_g1(bq, out);
  check_g3(bq, out);
  check_g4(bq, out);
  return out;
}

std::vector<Violation> validate_string(const BoundQuiver& bq) {
  std::vector<Violation> out;
  check_g1(bq, out);
  check_g4(bq, out);
  return out;
}

std::vector<std::size_t> component_of_vertices(const BoundQuiver& bq) {
  const std::size_t n = bq.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& arrow : bq.arrows()) {
    auto a = find(arrow.source);
    auto b = find(arrow.target);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
    }
  }
  // Roots are the smallest vertex of each class, so numbering roots in
  // vertex order numbers components by smallest vertex.
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  std::vector<std::size_t> result(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto root = find(v);
    if (label[root] == n) {
      label[root] = next++;
    }
    result[v] = label[root];
  }
  return result;
}

std::vector<BoundQuiver> connected_components(const BoundQuiver& bq) {
  const auto label = component_of_vertices(bq);
  const std::size_t count =
      label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<BoundQuiver> parts(count);
  for (VertexIndex v = 0; v < bq.vertex_count(); ++v) {
    parts[label[v]].add_vertex(bq.vertex(v));
  }
  for (const auto& arrow : bq.arrows()) {
    parts[label[arrow.source]].add_arrow(arrow.id, bq.vertex(arrow.source), bq.vertex(arrow.target));
  }
  for (const auto& [a, b] : bq.relations()) {
    parts[label[bq.arrow(a).source]].add_relation(bq.arrow(a).id, bq.arrow(b).id);
  }
  return parts;
}

std::vector<VertexIndex> isolated_vertices(const BoundQuiver& bq) {
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < bq.vertex_count(); ++v) {
    if (bq.outgoing(v).empty() && bq.incoming(v).empty()) {
      out.push_back(v);
    }
  }
  return out;
}

BoundQuiver parse_quiver(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty() || lines.front().tokens != std::vector<std::string>{"quiver"}) {
    throw ParseError(lines.empty() ? 0 : lines.front().number, "expected header `quiver`");
  }
  BoundQuiver bq;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, tokens] = lines[i];
    try {
      const auto& keyword = tokens.front();
      if (keyword == "vertex") {
        if (tokens.size() != 2) {
          throw ParseError(number, "expected `vertex <id>`");
        }
        bq.add_vertex(tokens[1]);
      } else if (keyword == "arrow") {
        if (tokens.size() != 4) {
          throw ParseError(number, "expected `arrow <id> <src> <tgt>`");
        }
        bq.add_arrow(tokens[1], tokens[2], tokens[3]);
      } else if (keyword == "relation") {
        if (tokens.size() > 3) {
          throw ParseError(number, "relations must have length 2");
        }
        if (tokens.size() != 3) {
          throw ParseError(number, "expected `relation <arrowId> <arrowId>`");
        }
        bq.add_relation(tokens[1], tokens[2]);
      } else {
        throw ParseError(number, "unknown keyword `" + keyword + "`");
      }
    } catch (const QuiverError& e) {
      throw ParseError(number, e.what());
    }
  }
  return bq;
}

std::string serialize_quiver(const BoundQuiver& bq) {
  std::ostringstream out;
  out << "quiver\n";
  for (const auto& v : bq.vertices()) {
    out << "vertex " << v << '\n';
  }
  for (const auto& arrow : bq.arrows()) {
    out << "arrow " << arrow.id << ' ' << bq.vertex(arrow.source) << ' ' << bq.vertex(arrow.target)
        << '\n';
  }
  for (const auto& [a, b] : bq.relations()) {
    out << "relation " << bq.arrow(a).id << ' ' << bq.arrow(b).id << '\n';
  }
  return out.str();
}

} // namespace agi
