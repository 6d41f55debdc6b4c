#pragma once

// Brute-force reference values, written straight from the definitions by
// listing every vertex subset. Test-only; shares nothing with the solvers
// except Graph::adjacent.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <vector>

#include "domchain/graph.hpp"
#include "domchain/parameter.hpp"

namespace naive {

using domchain::Graph;
using Set = std::uint64_t;

inline bool in(Set s, int v) { return (s >> v) & 1U; }

inline Set closed_nbhd(const Graph& g, int v) {
  Set out = Set{1} << v;
  for (int u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, v)) out |= Set{1} << u;
  }
  return out;
}

inline Set closed_nbhd_of_set(const Graph& g, Set s) {
  Set out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (in(s, v)) out |= closed_nbhd(g, v);
  }
  return out;
}

inline Set all(const Graph& g) {
  return g.order() == 64 ? ~Set{0} : (Set{1} << g.order()) - 1;
}

inline bool dominating(const Graph& g, Set s) { return closed_nbhd_of_set(g, s) == all(g); }

inline bool independent(const Graph& g, Set s) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (in(s, u) && in(s, v) && g.adjacent(u, v)) return false;
    }
  }
  return true;
}

// PN[v,S] = N[v] - N[S - v]
inline Set private_nbhd(const Graph& g, int v, Set s) {
  return closed_nbhd(g, v) & ~closed_nbhd_of_set(g, s & ~(Set{1} << v));
}

inline bool irredundant(const Graph& g, Set s) {
  for (int v = 0; v < g.order(); ++v) {
    if (in(s, v) && private_nbhd(g, v, s) == 0) return false;
  }
  return true;
}

inline bool open_irredundant(const Graph& g, Set s) {
  for (int v = 0; v < g.order(); ++v) {
    if (in(s, v) && (private_nbhd(g, v, s) & ~s) == 0) return false;
  }
  return true;
}

inline bool minimal_dominating(const Graph& g, Set s) {
  if (!dominating(g, s)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (in(s, v) && dominating(g, s & ~(Set{1} << v))) return false;
  }
  return true;
}

inline bool maximal_independent(const Graph& g, Set s) {
  if (!independent(g, s)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!in(s, v) && independent(g, s | (Set{1} << v))) return false;
  }
  return true;
}

inline bool maximal_irredundant(const Graph& g, Set s) {
  if (!irredundant(g, s)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!in(s, v) && irredundant(g, s | (Set{1} << v))) return false;
  }
  return true;
}

template <class Pred>
int min_size(const Graph& g, Pred pred) {
  int best = std::numeric_limits<int>::max();
  for (Set s = 0; s <= all(g); ++s) {
    if (pred(s)) best = std::min(best, std::popcount(s));
  }
  return best;
}

template <class Pred>
int max_size(const Graph& g, Pred pred) {
  int best = -1;
  for (Set s = 0; s <= all(g); ++s) {
    if (pred(s)) best = std::max(best, std::popcount(s));
  }
  return best;
}

inline int gamma(const Graph& g) { return min_size(g, [&](Set s) { return minimal_dominating(g, s); }); }
inline int upper_gamma(const Graph& g) { return max_size(g, [&](Set s) { return minimal_dominating(g, s); }); }
inline int i(const Graph& g) { return min_size(g, [&](Set s) { return maximal_independent(g, s); }); }
inline int alpha(const Graph& g) { return max_size(g, [&](Set s) { return maximal_independent(g, s); }); }
inline int ir(const Graph& g) { return min_size(g, [&](Set s) { return maximal_irredundant(g, s); }); }
inline int upper_ir(const Graph& g) { return max_size(g, [&](Set s) { return maximal_irredundant(g, s); }); }
inline int oir(const Graph& g) { return max_size(g, [&](Set s) { return open_irredundant(g, s); }); }

inline int is_at(const Graph& g, int v) {
  return max_size(g, [&](Set s) { return in(s, v) && independent(g, s); });
}
inline int irs_at(const Graph& g, int v) {
  return max_size(g, [&](Set s) { return in(s, v) && irredundant(g, s); });
}

inline int is(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, is_at(g, v));
  return best;
}
inline int irs(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, irs_at(g, v));
  return best;
}

inline int value(const Graph& g, domchain::Param p) {
  using domchain::Param;
  switch (p) {
    case Param::kIr: return ir(g);
    case Param::kGamma: return gamma(g);
    case Param::kI: return i(g);
    case Param::kAlpha: return alpha(g);
    case Param::kUpperGamma: return upper_gamma(g);
    case Param::kIR: return upper_ir(g);
    case Param::kOIR: return oir(g);
    case Param::kIS: return is(g);
    case Param::kIRS: return irs(g);
  }
  return -1;
}

// Largest set of pairwise disjoint edges.
inline int matching_number(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  int best = 0;
  const auto grow = [&](auto&& self, std::size_t from, Set used, int size) -> void {
    best = std::max(best, size);
    for (std::size_t k = from; k < edges.size(); ++k) {
      const Set ends = (Set{1} << edges[k].first) | (Set{1} << edges[k].second);
      if ((used & ends) == 0) self(self, k + 1, used | ends, size + 1);
    }
  };
  grow(grow, 0, 0, 0);
  return best;
}

// h is an induced subgraph of g: try every injective map.
inline bool contains_induced(const Graph& g, const Graph& h) {
  const int k = h.order();
  if (k > g.order()) return false;
  std::vector<int> image(k);
  const auto place = [&](auto&& self, int depth, Set used) -> bool {
    if (depth == k) return true;
    for (int x = 0; x < g.order(); ++x) {
      if (in(used, x)) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        ok = g.adjacent(image[d], x) == h.adjacent(d, depth);
      }
      if (!ok) continue;
      image[depth] = x;
      if (self(self, depth + 1, used | (Set{1} << x))) return true;
    }
    return false;
  };
  return place(place, 0, 0);
}

}  // namespace naive
