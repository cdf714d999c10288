#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace agi {

using VertexIndex = std::size_t;
using ArrowIndex = std::size_t;

struct Arrow {
  std::string id;
  VertexIndex source = 0;
  VertexIndex target = 0;

  bool operator==(const Arrow&) const = default;
};

/// Relation αβ of length two, stored as the pair of arrow indices (α, β).
using Relation = std::pair<ArrowIndex, ArrowIndex>;

/// A finite quiver together with a set of length-two relations.
///
/// Vertices and arrows keep their declaration order, which is the canonical
/// order used by every enumeration downstream. Relations are kept sorted by
/// arrow index. Identifiers are opaque tokens.
class BoundQuiver {
public:
  BoundQuiver() = default;

  VertexIndex add_vertex(std::string id);
  ArrowIndex add_arrow(std::string id, std::string_view source, std::string_view target);
  ArrowIndex add_arrow(std::string id, VertexIndex source, VertexIndex target);
  void add_relation(std::string_view first, std::string_view second);
  void add_relation(ArrowIndex first, ArrowIndex second);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const std::set<Relation>& relations() const noexcept { return relations_; }

  const std::string& vertex(VertexIndex v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }

  std::optional<VertexIndex> find_vertex(std::string_view id) const;
  std::optional<ArrowIndex> find_arrow(std::string_view id) const;

  /// Arrows starting (resp. ending) at `v`, in declaration order.
  const std::vector<ArrowIndex>& outgoing(VertexIndex v) const { return outgoing_.at(v); }
  const std::vector<ArrowIndex>& incoming(VertexIndex v) const { return incoming_.at(v); }

  bool has_relation(ArrowIndex first, ArrowIndex second) const {
    return relations_.contains({first, second});
  }
  bool composable(ArrowIndex first, ArrowIndex second) const {
    return arrows_.at(first).target == arrows_.at(second).source;
  }

  bool operator==(const BoundQuiver& other) const {
    return vertices_ == other.vertices_ && arrows_ == other.arrows_ &&
           relations_ == other.relations_;
  }

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::set<Relation> relations_;
  std::vector<std::vector<ArrowIndex>> outgoing_;
  std::vector<std::vector<ArrowIndex>> incoming_;
  std::unordered_map<std::string, VertexIndex> vertex_index_;
  std::unordered_map<std::string, ArrowIndex> arrow_index_;
};

enum class Axiom { G1, G2, G3, G4 };

std::string_view name(Axiom axiom);

/// One failed instance of a gentle/string axiom.
struct Violation {
  Axiom axiom = Axiom::G1;
  std::string where;  // offending vertex or arrow id
  std::string detail;

  bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& v);

/// Checks G1, G3 and G4. G2 holds by construction (relations are length-two
/// pairs) and is never reported.
std::vector<Violation> validate_gentle(const BoundQuiver& bq);

/// Checks G1 and G4 only.
std::vector<Violation> validate_string(const BoundQuiver& bq);

/// Splits by connectivity of the underlying graph; components are ordered by
/// their smallest vertex and keep the original relative order of everything.
std::vector<BoundQuiver> connected_components(const BoundQuiver& bq);

/// Component label of every vertex, numbered in order of smallest vertex.
std::vector<std::size_t> component_of_vertices(const BoundQuiver& bq);

/// Vertices with no incident arrow.
std::vector<VertexIndex> isolated_vertices(const BoundQuiver& bq);

/// Reads the line-oriented quiver format:
///
///     quiver
///     vertex <id>
///     arrow <id> <src> <tgt>
///     relation <arrowId> <arrowId>
///
/// `#` starts a comment. Errors carry the offending line number.
BoundQuiver parse_quiver(std::string_view text);

std::string serialize_quiver(const BoundQuiver& bq);

} // namespace agi
