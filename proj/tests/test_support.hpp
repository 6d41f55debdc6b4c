#pragma once

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "domchain/families.hpp"
#include "domchain/graph.hpp"
#include "domchain/graph_io.hpp"

namespace testing_support {

using domchain::Graph;

inline Graph make(int order, std::initializer_list<std::pair<int, int>> edges) {
  const std::vector<std::pair<int, int>> list(edges);
  return Graph::from_edges(order, list);
}

inline Graph family(const char* spec) {
  return domchain::generate(domchain::parse_family_spec(spec));
}

// G(n, q) with a caller-supplied engine.
inline Graph random_graph(std::mt19937_64& rng, int order, double q) {
  std::bernoulli_distribution coin(q);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(order, edges);
}

}  // namespace testing_support
