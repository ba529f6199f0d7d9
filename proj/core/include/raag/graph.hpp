#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raag {

using GeneratorId = std::uint16_t;

/// Maximum number of vertices; adjacency rows are 64-bit masks.
inline constexpr std::size_t kMaxVertices = 64;

/// A finite simple graph with a fixed total order on its vertices.
///
/// Vertex ids are positions in declaration order, and that order is the
/// tie-breaker for every normal form in the library. Instances are immutable.
class Graph {
 public:
  using Edge = std::pair<GeneratorId, GeneratorId>;

  Graph() = default;

  /// Builds a graph from vertex names and name pairs. Throws ParseError on
  /// empty or duplicate names, self-loops, unknown endpoints or repeated edges.
  Graph(std::vector<std::string> names,
        const std::vector<std::pair<std::string, std::string>>& edges);

  /// Same validation, endpoints given by index.
  static Graph from_edges(std::vector<std::string> names, const std::vector<Edge>& edges);

  static Graph complete(std::size_t d);
  static Graph empty(std::size_t d);
  static Graph path(std::size_t d);
  static Graph cycle(std::size_t d);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(GeneratorId v) const { return names_.at(v); }

  std::optional<GeneratorId> find(std::string_view name) const;
  /// Throws ParseError for unknown names.
  GeneratorId id(std::string_view name) const;

  bool adjacent(GeneratorId v, GeneratorId w) const {
    return v != w && ((adjacency_[v] >> w) & 1U) != 0;
  }
  std::uint64_t neighbours(GeneratorId v) const { return adjacency_[v]; }

  /// Edges as (smaller id, larger id), sorted.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  /// True when every pair of distinct members is adjacent.
  bool is_clique(const std::vector<GeneratorId>& members) const;

  /// Equality by vertex names (in order) and sorted edge list.
  bool operator==(const Graph& other) const {
    return names_ == other.names_ && adjacency_ == other.adjacency_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> adjacency_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

/// Canonical short name for the i-th generated vertex: a..z, then x26, x27, ...
std::string default_vertex_name(std::size_t i);

struct Clique {
  std::vector<GeneratorId> members;  // sorted ascending

  std::size_t size() const { return members.size(); }
  bool contains(GeneratorId v) const;
  GeneratorId min() const { return members.front(); }

  /// Ordered by size, then lexicographically.
  friend auto operator<=>(const Clique& a, const Clique& b) {
    if (a.members.size() != b.members.size()) return a.members.size() <=> b.members.size();
    return a.members <=> b.members;
  }
  friend bool operator==(const Clique&, const Clique&) = default;
};

/// All cliques (including the empty one), grouped by size.
struct CliqueTable {
  std::vector<std::vector<Clique>> by_size;

  /// c_0, c_1, ..., c_omega.
  std::vector<std::size_t> counts() const;
  std::size_t total() const;
  std::vector<Clique> all() const;
};

CliqueTable enumerate_cliques(const Graph& g);

/// Disjoint union; g1's vertices first. Colliding names are tagged with
/// suffixes "_1" / "_2".
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Disjoint union plus every edge between the two parts.
Graph join(const Graph& g1, const Graph& g2);

/// Induced subgraph on `keep`, in the ambient vertex order.
Graph full_subgraph(const Graph& g, const std::vector<GeneratorId>& keep);

/// A vertex map under which adjacent vertices stay commuting: every edge goes
/// to an edge or collapses onto one vertex.
struct GraphMorphism {
  GraphPtr source;
  GraphPtr target;
  std::vector<GeneratorId> vertex_map;

  /// Throws InvalidArgument when the map is malformed or breaks an edge.
  void validate() const;

  static GraphMorphism identity(GraphPtr g);
};

/// Injective and full: f(v), f(w) adjacent exactly when v, w are.
bool check_full_injective(const GraphMorphism& m);

}  // namespace raag
