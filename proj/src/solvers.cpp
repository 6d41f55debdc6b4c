#include "domchain/solvers.hpp"

#include <iostream>
#include <mutex>
#include <stdexcept>

namespace domchain {

namespace {

std::mutex& warning_mutex() {
  static std::mutex m;
  return m;
}

std::function<void(const std::string&)>& warning_handler() {
  static std::function<void(const std::string&)> handler =
      [](const std::string& message) { std::cerr << "warning: " << message << '\n'; };
  return handler;
}

void check_solvable(const Graph& g) {
  if (g.order() == 0) {
    throw PreconditionError("exact solvers need a graph with at least one vertex");
  }
  if (g.order() > kSolverHardCap) {
    throw CapacityError("exact solvers accept at most " +
                        std::to_string(kSolverHardCap) + " vertices, got " +
                        std::to_string(g.order()));
  }
  if (g.order() > kSolverSoftCap) {
    std::lock_guard lock(warning_mutex());
    if (warning_handler()) {
      warning_handler()("exact search on " + std::to_string(g.order()) +
                        " vertices may take exponential time");
    }
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw PreconditionError("vertex " + std::to_string(v) +
                            " out of range for order " +
                            std::to_string(g.order()));
  }
}

// Smallest-mask k-subset of `universe` bits 0..n-1 satisfying pred, visiting
// subsets of each size in increasing numeric order.
template <class Pred>
std::optional<Mask> first_subset_of_size(int n, int k, Pred&& pred) {
  if (k == 0) {
    if (pred(Mask{0})) return Mask{0};
    return std::nullopt;
  }
  if (k > n) return std::nullopt;
  const Mask limit = full_mask(n);
  Mask s = full_mask(k);
  while (true) {
    if (pred(s)) return s;
    // Gosper's hack: next larger integer with the same popcount.
    const Mask low = s & (~s + 1);
    const Mask ripple = s + low;
    if (ripple == 0 || (ripple & ~limit) != 0) break;
    s = ripple | (((s ^ ripple) >> 2) / low);
    if (s & ~limit) break;
  }
  return std::nullopt;
}

template <class Pred>
Solution minimum_by_size(const Graph& g, int from, Pred&& pred) {
  const int n = g.order();
  for (int k = from; k <= n; ++k) {
    if (auto s = first_subset_of_size(n, k, pred)) {
      return {k, VertexSet(*s)};
    }
  }
  throw std::logic_error("no set satisfies a property that V itself satisfies");
}

// Maximum over a hereditary family (`keep`), restricted to sets passing
// `accept`. Depth-first from the highest vertex, excluding before including,
// so sets are reached in increasing mask order and the first optimum found is
// the smallest-mask one. Ties never replace the incumbent, so pruning at
// `size + undecided <= best` is exact.
template <class Keep, class Accept>
class HereditaryMax {
 public:
  HereditaryMax(const Graph& g, Keep keep, Accept accept, Mask skip)
      : g_(g), keep_(std::move(keep)), accept_(std::move(accept)), skip_(skip) {}

  Solution run(Mask start, int floor) {
    best_ = floor;
    best_mask_ = 0;
    found_ = false;
    visit(start);
    descend(g_.order() - 1, start);
    if (!found_) throw std::logic_error("hereditary search found no set");
    return {best_, VertexSet(best_mask_)};
  }

 private:
  void visit(Mask s) {
    const int size = std::popcount(s);
    if (size > best_ && accept_(s)) {
      best_ = size;
      best_mask_ = s;
      found_ = true;
    }
  }

  void descend(int v, Mask s) {
    if (v < 0) return;
    const int undecided = std::popcount(full_mask(v + 1) & ~skip_);
    if (std::popcount(s) + undecided <= best_) return;
    if (skip_ & bit(v)) {
      descend(v - 1, s);
      return;
    }
    descend(v - 1, s);
    const Mask grown = s | bit(v);
    if (keep_(grown)) {
      visit(grown);
      descend(v - 1, grown);
    }
  }

  const Graph& g_;
  Keep keep_;
  Accept accept_;
  Mask skip_;
  int best_ = 0;
  Mask best_mask_ = 0;
  bool found_ = false;
};

template <class Keep, class Accept>
Solution hereditary_max(const Graph& g, Keep keep, Accept accept,
                        Mask start = 0, Mask skip = 0) {
  HereditaryMax<Keep, Accept> search(g, std::move(keep), std::move(accept),
                                     skip | start);
  return search.run(start, -1);
}

// Branch and bound for the independence number inside `cand`.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Graph& g) : g_(g) {}

  int run(Mask cand, int lower) {
    best_ = lower;
    search(cand, 0);
    return best_;
  }

 private:
  void search(Mask cand, int size) {
    // Vertices with at most one neighbour in cand belong to some maximum
    // independent set of cand.
    bool reduced = true;
    while (reduced && cand != 0) {
      reduced = false;
      for (Mask rest = cand; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (!(cand & bit(v))) continue;
        if (std::popcount(g_.neighbors(v) & cand) <= 1) {
          cand &= ~g_.closed_neighbors(v);
          ++size;
          reduced = true;
        }
      }
    }
    if (size + std::popcount(cand) <= best_) return;
    if (cand == 0) {
      best_ = size;
      return;
    }
    int pivot = -1;
    int pivot_degree = -1;
    for (Mask rest = cand; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(g_.neighbors(v) & cand);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    search(cand & ~g_.closed_neighbors(pivot), size + 1);
    search(cand & ~bit(pivot), size);
  }

  const Graph& g_;
  int best_ = 0;
};

int greedy_independent(const Graph& g, Mask cand) {
  int size = 0;
  while (cand != 0) {
    int pick = -1;
    int pick_degree = kWordBits + 1;
    for (Mask rest = cand; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(g.neighbors(v) & cand);
      if (d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    }
    cand &= ~g.closed_neighbors(pick);
    ++size;
  }
  return size;
}

}  // namespace

int independence_value(const Graph& g, Mask allowed) {
  IndependentSetSearch search(g);
  return search.run(allowed, greedy_independent(g, allowed) - 1);
}

void set_solver_warning_handler(std::function<void(const std::string&)> handler) {
  std::lock_guard lock(warning_mutex());
  warning_handler() = std::move(handler);
}

Solution max_independent_within(const Graph& g, Mask allowed) {
  const int target = independence_value(g, allowed);
  // Fix vertices from the top down, dropping each one whenever the rest can
  // still reach the target: this yields the smallest-mask optimum.
  Mask cand = allowed;
  Mask chosen = 0;
  for (int v = g.order() - 1; v >= 0; --v) {
    if (!(cand & bit(v))) continue;
    const int still_needed = target - std::popcount(chosen);
    if (independence_value(g, cand & ~bit(v)) >= still_needed) {
      cand &= ~bit(v);
    } else {
      chosen |= bit(v);
      cand &= ~g.closed_neighbors(v);
    }
  }
  return {target, VertexSet(chosen)};
}

Solution domination_number(const Graph& g) {
  check_solvable(g);
  const Mask all = g.vertices().mask();
  return minimum_by_size(g, 1, [&](Mask s) {
    return closed_neighborhood_mask(g, s) == all;
  });
}

Solution upper_domination(const Graph& g) {
  check_solvable(g);
  const Mask all = g.vertices().mask();
  return hereditary_max(
      g, [&](Mask s) { return irredundant_mask(g, s); },
      [&](Mask s) { return closed_neighborhood_mask(g, s) == all; });
}

Solution independence_number(const Graph& g) {
  check_solvable(g);
  return max_independent_within(g, g.vertices().mask());
}

Solution independent_domination(const Graph& g) {
  check_solvable(g);
  const Mask all = g.vertices().mask();
  return minimum_by_size(g, 1, [&](Mask s) {
    return independent_mask(g, s) && closed_neighborhood_mask(g, s) == all;
  });
}

Solution lower_irredundance(const Graph& g) {
  check_solvable(g);
  const Mask all = g.vertices().mask();
  return minimum_by_size(g, 1, [&](Mask s) {
    if (!irredundant_mask(g, s)) return false;
    // Irredundance is hereditary, so maximality only needs one-vertex
    // extensions.
    for (Mask rest = all & ~s; rest != 0; rest &= rest - 1) {
      if (irredundant_mask(g, s | (rest & (~rest + 1)))) return false;
    }
    return true;
  });
}

Solution upper_irredundance(const Graph& g) {
  check_solvable(g);
  return hereditary_max(
      g, [&](Mask s) { return irredundant_mask(g, s); },
      [](Mask) { return true; });
}

Solution open_irredundance(const Graph& g) {
  check_solvable(g);
  return hereditary_max(
      g, [&](Mask s) { return open_irredundant_mask(g, s); },
      [](Mask) { return true; });
}

Solution independence_saturation_at(const Graph& g, int v) {
  check_solvable(g);
  check_vertex(g, v);
  const VertexSet rest = g.vertices() - VertexSet(g.closed_neighbors(v));
  if (rest.empty()) return {1, VertexSet::of({v})};
  const Graph sub = induced_subgraph(g, rest);
  const Solution inner = independence_number(sub);
  // Map positions in `sub` back to vertices of g.
  const std::vector<int> original = rest.to_vector();
  Mask witness = bit(v);
  for (int k : inner.witness) witness |= bit(original[k]);
  return {1 + inner.value, VertexSet(witness)};
}

SaturationSolution independence_saturation(const Graph& g) {
  check_solvable(g);
  SaturationSolution best{kWordBits + 1, 0, {}};
  for (int v = 0; v < g.order(); ++v) {
    const Solution s = independence_saturation_at(g, v);
    if (s.value < best.value) best = {s.value, v, s.witness};
  }
  return best;
}

Solution irredundance_saturation_at(const Graph& g, int v) {
  check_solvable(g);
  check_vertex(g, v);
  return hereditary_max(
      g, [&](Mask s) { return irredundant_mask(g, s); },
      [](Mask) { return true; }, bit(v));
}

SaturationSolution irredundance_saturation(const Graph& g) {
  check_solvable(g);
  SaturationSolution best{kWordBits + 1, 0, {}};
  for (int v = 0; v < g.order(); ++v) {
    const Solution s = irredundance_saturation_at(g, v);
    if (s.value < best.value) best = {s.value, v, s.witness};
  }
  return best;
}

Solution compute(const Graph& g, Param p) {
  switch (p) {
    case Param::kIr: return lower_irredundance(g);
    case Param::kGamma: return domination_number(g);
    case Param::kI: return independent_domination(g);
    case Param::kAlpha: return independence_number(g);
    case Param::kUpperGamma: return upper_domination(g);
    case Param::kIR: return upper_irredundance(g);
    case Param::kOIR: return open_irredundance(g);
    case Param::kIS: {
      const auto s = independence_saturation(g);
      return {s.value, s.witness};
    }
    case Param::kIRS: {
      const auto s = irredundance_saturation(g);
      return {s.value, s.witness};
    }
  }
  throw InvalidArgument("unknown parameter");
}

std::string check_report_invariants(const ParameterReport& r) {
  const int ir = r.value(Param::kIr);
  const int gamma = r.value(Param::kGamma);
  const int i = r.value(Param::kI);
  const int alpha = r.value(Param::kAlpha);
  const int upper_gamma = r.value(Param::kUpperGamma);
  const int upper_ir = r.value(Param::kIR);
  const int oir = r.value(Param::kOIR);
  const int is = r.value(Param::kIS);
  const int irs = r.value(Param::kIRS);
  if (!(ir <= gamma)) return "ir <= gamma";
  if (!(gamma <= i)) return "gamma <= i";
  if (!(i <= alpha)) return "i <= alpha";
  if (!(alpha <= upper_gamma)) return "alpha <= Gamma";
  if (!(upper_gamma <= upper_ir)) return "Gamma <= IR";
  if (!(gamma <= 2 * ir - 1)) return "gamma <= 2 ir - 1";
  if (!(i <= is && is <= alpha)) return "i <= IS <= alpha";
  if (!(ir <= irs && irs <= upper_ir)) return "ir <= IRS <= IR";
  if (!(is <= irs)) return "IS <= IRS";
  if (!(oir <= upper_ir)) return "OIR <= IR";
  return {};
}

ParameterReport full_report(const Graph& g) {
  check_solvable(g);
  ParameterReport r;
  r.order = g.order();
  r.connected = is_connected(g);
  const auto put = [&](Param p, const Solution& s) {
    r.values[param_index(p)] = s.value;
    r.witnesses[param_index(p)] = s.witness;
  };
  put(Param::kIr, lower_irredundance(g));
  put(Param::kGamma, domination_number(g));
  put(Param::kI, independent_domination(g));
  put(Param::kAlpha, independence_number(g));
  put(Param::kUpperGamma, upper_domination(g));
  put(Param::kIR, upper_irredundance(g));
  put(Param::kOIR, open_irredundance(g));
  const auto is = independence_saturation(g);
  put(Param::kIS, {is.value, is.witness});
  r.is_vertex = is.vertex;
  const auto irs = irredundance_saturation(g);
  put(Param::kIRS, {irs.value, irs.witness});
  r.irs_vertex = irs.vertex;

  if (const std::string broken = check_report_invariants(r); !broken.empty()) {
    throw std::logic_error("parameter report violates " + broken);
  }
  return r;
}

}  // namespace domchain
