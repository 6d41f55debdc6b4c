#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "domchain/error.hpp"

namespace domchain {

using Mask = std::uint64_t;

// Number of vertices a Graph can physically hold (one adjacency word).
inline constexpr int kWordBits = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }

constexpr Mask full_mask(int order) {
  return order >= kWordBits ? ~Mask{0} : bit(order) - 1;
}

// A subset of {0, ..., 63}. Whether it fits a particular graph is checked by
// the operations that take both.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask mask) : mask_(mask) {}

  static VertexSet of(std::initializer_list<int> vertices) {
    Mask m = 0;
    for (int v : vertices) m |= bit(v);
    return VertexSet(m);
  }
  static constexpr VertexSet range(int order) {
    return VertexSet(full_mask(order));
  }

  constexpr Mask mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int v) const { return (mask_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  constexpr VertexSet with(int v) const { return VertexSet(mask_ | bit(v)); }
  constexpr VertexSet without(int v) const {
    return VertexSet(mask_ & ~bit(v));
  }

  constexpr VertexSet operator|(VertexSet o) const {
    return VertexSet(mask_ | o.mask_);
  }
  constexpr VertexSet operator&(VertexSet o) const {
    return VertexSet(mask_ & o.mask_);
  }
  constexpr VertexSet operator-(VertexSet o) const {
    return VertexSet(mask_ & ~o.mask_);
  }
  constexpr bool operator==(const VertexSet&) const = default;

  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const { return {begin(), end()}; }

 private:
  Mask mask_ = 0;
};

// Immutable simple undirected graph on vertices {0, ..., order-1}. Row v of
// the adjacency holds N(v) as a bit mask.
class Graph {
 public:
  Graph() = default;

  // Edgeless graph E_order.
  explicit Graph(int order);

  // Validates symmetry, irreflexivity and row range.
  static Graph from_adjacency(std::span<const Mask> rows);
  static Graph from_edges(int order,
                          std::span<const std::pair<int, int>> edges);

  int order() const { return order_; }
  VertexSet vertices() const { return VertexSet::range(order_); }

  Mask neighbors(int v) const { return adjacency_[v]; }
  Mask closed_neighbors(int v) const { return adjacency_[v] | bit(v); }
  bool adjacent(int u, int v) const { return (adjacency_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(adjacency_[v]); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const;

 private:
  int order_ = 0;
  std::array<Mask, kWordBits> adjacency_{};
};

// A pair of disjoint independent vertex sets of a graph; the bipartite
// subgraph B is the one induced by left | right.
class BipartiteView {
 public:
  // Throws PreconditionError unless the sides are disjoint and independent.
  BipartiteView(const Graph& graph, VertexSet left, VertexSet right);

  const Graph& graph() const { return *graph_; }
  VertexSet left() const { return left_; }
  VertexSet right() const { return right_; }
  int order() const { return left_.size() + right_.size(); }

 private:
  const Graph* graph_;
  VertexSet left_;
  VertexSet right_;
};

// Throws PreconditionError if s has a vertex outside g.
void require_valid(const Graph& g, VertexSet s);

inline Mask closed_neighborhood_mask(const Graph& g, Mask s) {
  Mask out = s;
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    out |= g.neighbors(std::countr_zero(rest));
  }
  return out;
}

inline bool independent_mask(const Graph& g, Mask s) {
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    if (g.neighbors(std::countr_zero(rest)) & s) return false;
  }
  return true;
}

// Vertices dominated by at least one member of s, and by at least two.
// For v in s, PN[v, s] = N[v] & covered & ~covered_twice.
inline void coverage_masks(const Graph& g, Mask s, Mask& covered,
                           Mask& covered_twice) {
  covered = 0;
  covered_twice = 0;
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    const Mask closed = g.closed_neighbors(std::countr_zero(rest));
    covered_twice |= covered & closed;
    covered |= closed;
  }
}

inline bool irredundant_mask(const Graph& g, Mask s) {
  Mask covered = 0;
  Mask twice = 0;
  coverage_masks(g, s, covered, twice);
  const Mask once = covered & ~twice;
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    if ((g.closed_neighbors(std::countr_zero(rest)) & once) == 0) return false;
  }
  return true;
}

inline bool open_irredundant_mask(const Graph& g, Mask s) {
  Mask covered = 0;
  Mask twice = 0;
  coverage_masks(g, s, covered, twice);
  const Mask once_outside = covered & ~twice & ~s;
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    if ((g.neighbors(std::countr_zero(rest)) & once_outside) == 0) {
      return false;
    }
  }
  return true;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s);
bool is_dominating(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
// Throws PreconditionError when v is not in s.
VertexSet private_neighborhood(const Graph& g, int v, VertexSet s);
bool is_irredundant(const Graph& g, VertexSet s);
bool is_open_irredundant(const Graph& g, VertexSet s);

// Maximum matching of the bipartite subgraph, by augmenting paths.
int bipartite_matching_number(const BipartiteView& b);

// Vertices of s, relabelled 0..|s|-1 in ascending order.
Graph induced_subgraph(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// Proper 2-colouring as (colour-0 side, colour-1 side), lowest vertex of each
// component on side 0; nullopt when g has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

std::string to_string(VertexSet s);

}  // namespace domchain
