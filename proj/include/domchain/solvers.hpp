#pragma once

#include <array>
#include <functional>
#include <string>

#include "domchain/graph.hpp"
#include "domchain/parameter.hpp"

namespace domchain {

// Exact solvers refuse larger graphs; above the soft limit they warn.
inline constexpr int kSolverHardCap = 32;
inline constexpr int kSolverSoftCap = 24;

// Receives the soft-limit warning. The default handler writes to stderr;
// pass an empty function to silence it.
void set_solver_warning_handler(std::function<void(const std::string&)> handler);

// A parameter value with a set certifying it. Among all optimal sets the
// witness is the one with the smallest mask value.
struct Solution {
  int value = 0;
  VertexSet witness;
};

// Saturation minima also name the vertex attaining the minimum (the lowest
// index on ties); the witness is a set of the stated size containing it.
struct SaturationSolution {
  int value = 0;
  int vertex = 0;
  VertexSet witness;
};

Solution domination_number(const Graph& g);
Solution upper_domination(const Graph& g);
Solution independence_number(const Graph& g);
Solution independent_domination(const Graph& g);
Solution lower_irredundance(const Graph& g);
Solution upper_irredundance(const Graph& g);
Solution open_irredundance(const Graph& g);

Solution independence_saturation_at(const Graph& g, int v);
SaturationSolution independence_saturation(const Graph& g);
Solution irredundance_saturation_at(const Graph& g, int v);
SaturationSolution irredundance_saturation(const Graph& g);

// Maximum independent subset of `allowed`, with the smallest-mask witness.
// No order checks; used by the other modules on subgraphs.
Solution max_independent_within(const Graph& g, Mask allowed);

// Independence number of g[allowed], value only.
int independence_value(const Graph& g, Mask allowed);

// Dispatches to the solver for p.
Solution compute(const Graph& g, Param p);

struct ParameterReport {
  int order = 0;
  bool connected = true;
  std::array<int, kAllParams.size()> values{};
  std::array<VertexSet, kAllParams.size()> witnesses{};
  int is_vertex = 0;
  int irs_vertex = 0;

  int value(Param p) const { return values[param_index(p)]; }
  VertexSet witness(Param p) const { return witnesses[param_index(p)]; }
};

// All nine parameters. Throws std::logic_error if the chain
// ir <= gamma <= i <= alpha <= Gamma <= IR or the saturation bounds fail,
// which would mean a solver bug.
ParameterReport full_report(const Graph& g);

// Names the first violated relation, or returns an empty string.
std::string check_report_invariants(const ParameterReport& r);

}  // namespace domchain
