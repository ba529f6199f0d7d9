#include "raag/graph.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "raag/error.hpp"

namespace raag {
namespace {

void validate_names(const std::vector<std::string>& names) {
  if (names.size() > kMaxVertices) {
    throw ParseError("graph has " + std::to_string(names.size()) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw ParseError("empty vertex name");
    for (const char ch : n) {
      const auto u = static_cast<unsigned char>(ch);
      if (u < 0x21 || u > 0x7e || ch == '^') {
        throw ParseError("vertex name '" + n + "' must be printable ASCII without spaces or '^'");
      }
    }
    if (!seen.insert(n).second) throw ParseError("duplicate vertex name '" + n + "'");
  }
}

}  // namespace

std::string default_vertex_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "x" + std::to_string(i);
}

Graph Graph::from_edges(std::vector<std::string> names, const std::vector<Edge>& edges) {
  validate_names(names);
  Graph g;
  g.adjacency_.assign(names.size(), 0);
  g.names_ = std::move(names);
  for (const auto& [v, w] : edges) {
    if (v >= g.size() || w >= g.size()) throw ParseError("edge endpoint out of range");
    if (v == w) throw ParseError("self-loop at '" + g.names_[v] + "'");
    if (g.adjacent(v, w)) {
      throw ParseError("duplicate edge {" + g.names_[v] + ", " + g.names_[w] + "}");
    }
    g.adjacency_[v] |= std::uint64_t{1} << w;
    g.adjacency_[w] |= std::uint64_t{1} << v;
  }
  return g;
}

Graph::Graph(std::vector<std::string> names,
             const std::vector<std::pair<std::string, std::string>>& edges) {
  validate_names(names);
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  auto lookup = [&](const std::string& n) {
    const auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) throw ParseError("edge mentions unknown vertex '" + n + "'");
    return static_cast<GeneratorId>(it - names.begin());
  };
  for (const auto& [a, b] : edges) ids.emplace_back(lookup(a), lookup(b));
  *this = from_edges(std::move(names), ids);
}

Graph Graph::complete(std::size_t d) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back(default_vertex_name(i));
    for (std::size_t j = i + 1; j < d; ++j) edges.emplace_back(i, j);
  }
  return from_edges(std::move(names), edges);
}

Graph Graph::empty(std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back(default_vertex_name(i));
  return from_edges(std::move(names), {});
}

Graph Graph::path(std::size_t d) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back(default_vertex_name(i));
    if (i + 1 < d) edges.emplace_back(i, i + 1);
  }
  return from_edges(std::move(names), edges);
}

Graph Graph::cycle(std::size_t d) {
  if (d < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < d; ++i) {
    names.push_back(default_vertex_name(i));
    edges.emplace_back(std::min(i, (i + 1) % d), std::max(i, (i + 1) % d));
  }
  return from_edges(std::move(names), edges);
}

std::optional<GeneratorId> Graph::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<GeneratorId>(it - names_.begin());
}

GeneratorId Graph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw ParseError("unknown generator '" + std::string(name) + "'");
}

std::vector<Graph::Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < size(); ++v) {
    for (std::size_t w = v + 1; w < size(); ++w) {
      if (adjacent(v, w)) out.emplace_back(v, w);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto row : adjacency_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::is_clique(const std::vector<GeneratorId>& members) const {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= size()) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

bool Clique::contains(GeneratorId v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

std::vector<std::size_t> CliqueTable::counts() const {
  std::vector<std::size_t> out;
  out.reserve(by_size.size());
  for (const auto& level : by_size) out.push_back(level.size());
  return out;
}

std::size_t CliqueTable::total() const {
  std::size_t n = 0;
  for (const auto& level : by_size) n += level.size();
  return n;
}

std::vector<Clique> CliqueTable::all() const {
  std::vector<Clique> out;
  for (const auto& level : by_size) out.insert(out.end(), level.begin(), level.end());
  return out;
}

namespace {

void extend_clique(const Graph& g, std::vector<GeneratorId>& current, std::uint64_t candidates,
                   CliqueTable& table) {
  if (table.by_size.size() <= current.size()) table.by_size.resize(current.size() + 1);
  table.by_size[current.size()].push_back(Clique{current});
  while (candidates != 0) {
    const auto v = static_cast<GeneratorId>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    current.push_back(v);
    // Only later vertices keep each clique generated once, in increasing order.
    extend_clique(g, current, candidates & g.neighbours(v), table);
    current.pop_back();
  }
}

}  // namespace

CliqueTable enumerate_cliques(const Graph& g) {
  CliqueTable table;
  std::vector<GeneratorId> current;
  const std::uint64_t all =
      g.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.size()) - 1);
  extend_clique(g, current, all, table);
  for (auto& level : table.by_size) std::sort(level.begin(), level.end());
  return table;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<std::string> names = g1.names();
  bool collide = false;
  for (const auto& n : g2.names()) {
    if (g1.find(n)) collide = true;
  }
  if (collide) {
    for (auto& n : names) n += "_1";
  }
  for (const auto& n : g2.names()) names.push_back(collide ? n + "_2" : n);
  std::vector<Graph::Edge> edges = g1.edges();
  const auto shift = static_cast<GeneratorId>(g1.size());
  for (const auto& [v, w] : g2.edges()) edges.emplace_back(v + shift, w + shift);
  return Graph::from_edges(std::move(names), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const Graph u = disjoint_union(g1, g2);
  std::vector<Graph::Edge> edges = u.edges();
  for (std::size_t v = 0; v < g1.size(); ++v) {
    for (std::size_t w = 0; w < g2.size(); ++w) edges.emplace_back(v, g1.size() + w);
  }
  return Graph::from_edges(u.names(), edges);
}

Graph full_subgraph(const Graph& g, const std::vector<GeneratorId>& keep) {
  std::vector<GeneratorId> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("full_subgraph: repeated vertex");
  }
  std::vector<std::string> names;
  for (const auto v : sorted) {
    if (v >= g.size()) throw InvalidArgument("full_subgraph: vertex out of range");
    names.push_back(g.name(v));
  }
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (g.adjacent(sorted[i], sorted[j])) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(std::move(names), edges);
}

void GraphMorphism::validate() const {
  if (!source || !target) throw InvalidArgument("graph morphism without source or target");
  if (vertex_map.size() != source->size()) {
    throw InvalidArgument("graph morphism must map every source vertex");
  }
  for (const auto w : vertex_map) {
    if (w >= target->size()) throw InvalidArgument("graph morphism image out of range");
  }
  for (const auto& [v, w] : source->edges()) {
    const GeneratorId fv = vertex_map[v];
    const GeneratorId fw = vertex_map[w];
    if (fv != fw && !target->adjacent(fv, fw)) {
      throw InvalidArgument("graph morphism sends edge {" + source->name(v) + ", " +
                            source->name(w) + "} to a non-edge");
    }
  }
}

GraphMorphism GraphMorphism::identity(GraphPtr g) {
  GraphMorphism m{g, g, {}};
  for (std::size_t v = 0; v < g->size(); ++v) m.vertex_map.push_back(static_cast<GeneratorId>(v));
  return m;
}

bool check_full_injective(const GraphMorphism& m) {
  m.validate();
  const Graph& s = *m.source;
  for (std::size_t v = 0; v < s.size(); ++v) {
    for (std::size_t w = v + 1; w < s.size(); ++w) {
      const GeneratorId fv = m.vertex_map[v];
      const GeneratorId fw = m.vertex_map[w];
      if (fv == fw) return false;
      if (m.target->adjacent(fv, fw) != s.adjacent(v, w)) return false;
    }
  }
  return true;
}

}  // namespace raag
