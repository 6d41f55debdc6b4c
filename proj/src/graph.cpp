#include "domchain/graph.hpp"

#include <sstream>

namespace domchain {

Graph::Graph(int order) : order_(order) {
  if (order < 0 || order > kWordBits) {
    throw CapacityError("graph order " + std::to_string(order) +
                        " outside 0.." + std::to_string(kWordBits));
  }
}

Graph Graph::from_adjacency(std::span<const Mask> rows) {
  Graph g(static_cast<int>(rows.size()));
  const Mask all = full_mask(g.order_);
  for (int v = 0; v < g.order_; ++v) {
    const Mask row = rows[v];
    if (row & ~all) {
      throw PreconditionError("adjacency row " + std::to_string(v) +
                              " names a vertex outside the graph");
    }
    if (row & bit(v)) {
      throw PreconditionError("loop at vertex " + std::to_string(v));
    }
    g.adjacency_[v] = row;
  }
  for (int u = 0; u < g.order_; ++u) {
    for (int v = u + 1; v < g.order_; ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) {
        throw PreconditionError("asymmetric adjacency between " +
                                std::to_string(u) + " and " +
                                std::to_string(v));
      }
    }
  }
  return g;
}

Graph Graph::from_edges(int order,
                        std::span<const std::pair<int, int>> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw PreconditionError("edge " + std::to_string(u) + "-" +
                              std::to_string(v) + " out of range for order " +
                              std::to_string(order));
    }
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    g.adjacency_[u] |= bit(v);
    g.adjacency_[v] |= bit(u);
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order_; ++u) {
    for (Mask rest = adjacency_[u] & ~full_mask(u + 1); rest != 0;
         rest &= rest - 1) {
      out.emplace_back(u, std::countr_zero(rest));
    }
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (order_ != other.order_) return false;
  for (int v = 0; v < order_; ++v) {
    if (adjacency_[v] != other.adjacency_[v]) return false;
  }
  return true;
}

BipartiteView::BipartiteView(const Graph& graph, VertexSet left,
                             VertexSet right)
    : graph_(&graph), left_(left), right_(right) {
  require_valid(graph, left);
  require_valid(graph, right);
  if (!(left & right).empty()) {
    throw PreconditionError("bipartition sides overlap");
  }
  if (!independent_mask(graph, left.mask()) ||
      !independent_mask(graph, right.mask())) {
    throw PreconditionError("bipartition side contains an edge");
  }
}

void require_valid(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw PreconditionError("vertex set " + to_string(s) +
                            " exceeds graph order " +
                            std::to_string(g.order()));
  }
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  require_valid(g, s);
  return VertexSet(closed_neighborhood_mask(g, s.mask()));
}

bool is_dominating(const Graph& g, VertexSet s) {
  require_valid(g, s);
  return closed_neighborhood_mask(g, s.mask()) == g.vertices().mask();
}

bool is_independent(const Graph& g, VertexSet s) {
  require_valid(g, s);
  return independent_mask(g, s.mask());
}

VertexSet private_neighborhood(const Graph& g, int v, VertexSet s) {
  require_valid(g, s);
  if (v < 0 || v >= g.order() || !s.contains(v)) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " is not a member of " + to_string(s));
  }
  const Mask others = closed_neighborhood_mask(g, s.without(v).mask());
  return VertexSet(g.closed_neighbors(v) & ~others);
}

bool is_irredundant(const Graph& g, VertexSet s) {
  require_valid(g, s);
  return irredundant_mask(g, s.mask());
}

bool is_open_irredundant(const Graph& g, VertexSet s) {
  require_valid(g, s);
  return open_irredundant_mask(g, s.mask());
}

namespace {

bool augment(const Graph& g, int u, Mask right, Mask& visited,
             std::array<int, kWordBits>& mate) {
  for (Mask rest = g.neighbors(u) & right & ~visited; rest != 0;
       rest &= rest - 1) {
    const int w = std::countr_zero(rest);
    if (visited & bit(w)) continue;
    visited |= bit(w);
    if (mate[w] < 0 || augment(g, mate[w], right, visited, mate)) {
      mate[w] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

int bipartite_matching_number(const BipartiteView& b) {
  std::array<int, kWordBits> mate;
  mate.fill(-1);
  int matched = 0;
  for (int u : b.left()) {
    Mask visited = 0;
    if (augment(b.graph(), u, b.right().mask(), visited, mate)) ++matched;
  }
  return matched;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  require_valid(g, s);
  std::array<Mask, kWordBits> rows{};
  int k = 0;
  for (int v : s) {
    // Compress the row onto the positions of s.
    Mask row = 0;
    int j = 0;
    for (int w : s) {
      if (g.adjacent(v, w)) row |= bit(j);
      ++j;
    }
    rows[k++] = row;
  }
  return Graph::from_adjacency(std::span<const Mask>(rows.data(), k));
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  Mask seen = 1;
  Mask frontier = 1;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask rest = frontier; rest != 0; rest &= rest - 1) {
      next |= g.neighbors(std::countr_zero(rest));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertices().mask();
}

Graph complement(const Graph& g) {
  std::array<Mask, kWordBits> rows{};
  const Mask all = g.vertices().mask();
  for (int v = 0; v < g.order(); ++v) {
    rows[v] = all & ~g.closed_neighbors(v);
  }
  return Graph::from_adjacency(std::span<const Mask>(rows.data(), g.order()));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int order = a.order() + b.order();
  if (order > kWordBits) {
    throw CapacityError("disjoint union of order " + std::to_string(order) +
                        " exceeds " + std::to_string(kWordBits));
  }
  std::array<Mask, kWordBits> rows{};
  for (int v = 0; v < a.order(); ++v) rows[v] = a.neighbors(v);
  for (int v = 0; v < b.order(); ++v) {
    rows[a.order() + v] = b.neighbors(v) << a.order();
  }
  return Graph::from_adjacency(std::span<const Mask>(rows.data(), order));
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  Mask side[2] = {0, 0};
  Mask unseen = g.vertices().mask();
  while (unseen != 0) {
    const int root = std::countr_zero(unseen);
    Mask frontier = bit(root);
    int colour = 0;
    while (frontier != 0) {
      side[colour] |= frontier;
      unseen &= ~frontier;
      Mask next = 0;
      for (Mask rest = frontier; rest != 0; rest &= rest - 1) {
        next |= g.neighbors(std::countr_zero(rest));
      }
      colour ^= 1;
      frontier = next & unseen;
    }
  }
  // BFS layers alternate sides; an edge inside a layer means an odd cycle.
  if (!independent_mask(g, side[0]) || !independent_mask(g, side[1])) {
    return std::nullopt;
  }
  return std::make_pair(VertexSet(side[0]), VertexSet(side[1]));
}

std::string to_string(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

}  // namespace domchain
