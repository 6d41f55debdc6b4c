#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domchain/corpus.hpp"
#include "domchain/graph.hpp"
#include "domchain/hfree.hpp"
#include "domchain/parameter.hpp"

namespace domchain {

// Labelled enumeration is exhaustive up to this order; beyond it the
// classical search samples random graphs and never claims exactness.
inline constexpr int kRamseyExhaustiveOrder = 6;
// Largest side for which all 2^(m*m) bi-adjacency patterns are enumerated.
inline constexpr int kBipartiteExhaustiveSide = 5;

// Observed value of a Ramsey-type or boundedness constant. `exact` is true
// only when the whole search space up to the decision was exhausted;
// otherwise `observed` is a lower bound.
struct EmpiricalBound {
  std::string symbol;       // "R(m,n)", "BR(n)", "q(n)", ...
  std::vector<int> params;  // (m, n) or (n)
  int observed = 0;
  bool exact = false;
  // Largest structure below the decision lacking the target, if any.
  std::optional<Graph> counterexample;
  std::vector<Mask> counterexample_pattern;  // bi-adjacency rows (BR only)
  // Candidates up to the decision, in enumeration order; independent of the
  // worker count.
  std::uint64_t candidates_checked = 0;
};

struct SearchOptions {
  int jobs = 0;                        // 0: hardware concurrency
  std::uint64_t samples = 200000;      // random graphs per order above 6
  std::uint64_t seed = 0x5eed;
};

// Smallest N <= order_cap such that every graph of order N has a clique of
// size m or an independent set of size n.
EmpiricalBound ramsey_witness_search(int m, int n, int order_cap,
                                     const SearchOptions& opts = {});

// Smallest side m <= side_cap such that every m x m bi-adjacency pattern has
// an n x n all-ones or all-zeros sub-block.
EmpiricalBound bipartite_ramsey_search(int n, int side_cap,
                                       const SearchOptions& opts = {});

// True when the m x m pattern has an n x n all-ones or all-zeros sub-block.
bool has_uniform_block(const std::vector<Mask>& rows, int m, int n);

// Bipartite graph with sides 0..m-1 and m..2m-1 from bi-adjacency rows.
Graph pattern_graph(const std::vector<Mask>& rows, int m);

struct LemmaReport {
  int n = 0;
  int p = 0;
  int br = 0;                         // leaves per side of the variants checked
  std::uint64_t members_checked = 0;
  std::uint64_t via_complete_bipartite = 0;  // contain K_{n,n}
  std::uint64_t via_bistar = 0;              // contain BS_n^p but not K_{n,n}
  std::uint64_t violations = 0;
  std::optional<std::uint64_t> first_violation_pattern;
  std::optional<Graph> first_violation;

  bool ok() const { return violations == 0; }
};

// Every bistar variant with `br` leaves per side and path length p must
// contain K_{n,n} or BS_n^p as an induced subgraph.
LemmaReport verify_lemma_bistar_reduction(int n, int p, int br,
                                          const SearchOptions& opts = {});

// Restricts which corpus graphs an audit looks at.
struct CorpusFilter {
  bool connected_only = false;
};

struct ZverovichReport {
  int k = 0;
  std::uint64_t graphs_seen = 0;
  std::uint64_t graphs_checked = 0;  // passed the filter and the freeness test
  std::uint64_t tight = 0;           // equality in the bound
  std::uint64_t violations = 0;
  std::optional<std::uint64_t> first_violation_index;
  std::optional<Graph> first_violation;
  // gamma -> largest i seen among checked graphs with that gamma.
  std::map<int, int> max_i_by_gamma;

  bool ok() const { return violations == 0; }
};

// i(G) <= gamma(G)(k-2) - (k-3) on every graph free of the bistar variants
// with k-1 leaves per side and a 2-vertex centre path. Requires k >= 3.
// Stops at the first violation in corpus order.
ZverovichReport zverovich_audit(const Corpus& corpus, int k,
                                const CorpusFilter& filter = {},
                                const SearchOptions& opts = {});

struct KonigReport {
  std::uint64_t graphs_seen = 0;
  std::uint64_t bipartite_checked = 0;
  std::uint64_t skipped_non_bipartite = 0;
  std::uint64_t violations = 0;
  std::optional<std::uint64_t> first_violation_index;
  std::optional<Graph> first_violation;

  bool ok() const { return violations == 0; }
};

// alpha(B) + nu(B) = |V(B)| on every bipartite corpus graph. A
// non-bipartite graph throws PreconditionError unless skip_non_bipartite.
KonigReport konig_audit(const Corpus& corpus, bool skip_non_bipartite,
                        const CorpusFilter& filter = {},
                        const SearchOptions& opts = {});

// Among bipartite corpus graphs free of nK_2 and K_{n,n}, one more than the
// largest matching number seen. Non-bipartite graphs are skipped.
EmpiricalBound lozin_q_profile(int n, const Corpus& corpus,
                               const SearchOptions& opts = {});

struct OrderStats {
  std::uint64_t qualifying = 0;  // connected, family-free
  int max = 0;
  std::string witness_graph6;    // first graph attaining max
};

struct ScanResult {
  std::string family;
  Param param = Param::kGamma;
  std::uint64_t graphs_seen = 0;
  std::map<int, OrderStats> per_order;

  // Largest value over orders <= the given order, or nullopt if none
  // qualified.
  std::optional<int> cumulative_max(int order) const;
  // The running maximum does not increase between the last two orders that
  // had qualifying graphs.
  bool flat_tail() const;
  // Largest value over all orders; 0 when nothing qualified.
  int overall_max() const;
};

struct ProfileRequest {
  ForbiddenFamily family;
  Param param;
};

// Per-order maxima of the parameter over connected family-free corpus
// graphs. Several requests share one pass over the corpus.
std::vector<ScanResult> bound_profiles(const Corpus& corpus,
                                       const std::vector<ProfileRequest>& requests,
                                       const SearchOptions& opts = {});

ScanResult bound_profile(const Corpus& corpus, const ForbiddenFamily& fam,
                         Param param, const SearchOptions& opts = {});

}  // namespace domchain
