#include "suite.hpp"

#include <random>

namespace raag::suite {

Graph random_graph(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(default_vertex_name(i));
  std::vector<Graph::Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = v + 1; w < n; ++w) {
      if (rng() % 2 == 0) edges.emplace_back(static_cast<GeneratorId>(v), static_cast<GeneratorId>(w));
    }
  }
  return Graph::from_edges(std::move(names), edges);
}

const std::vector<NamedGraph>& graphs() {
  static const std::vector<NamedGraph> all = {
      {"K3", share(Graph::complete(3))},   {"E3", share(Graph::empty(3))},
      {"P4", share(Graph::path(4))},       {"C4", share(Graph::cycle(4))},
      {"C5", share(Graph::cycle(5))},      {"R5", share(random_graph(5, 3))},
  };
  return all;
}

}  // namespace raag::suite
