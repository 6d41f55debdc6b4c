#include "domchain/ramsey_lab.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_map>

#include "domchain/error.hpp"
#include "domchain/families.hpp"
#include "domchain/graph_io.hpp"
#include "domchain/solvers.hpp"

namespace domchain {

namespace {

// Smallest counterexample index seen by one chunk. Chunks stop at their
// first hit, so the merged index is the first in enumeration order.
struct FirstHit {
  std::optional<std::uint64_t> index;

  void merge(const FirstHit& later) {
    if (!index) index = later.index;
  }
};

bool has_clique(const Graph& g, int m) {
  return independence_value(complement(g), full_mask(g.order())) >= m;
}

bool has_clique_or_coclique(const Graph& g, int m, int n) {
  return has_clique(g, m) || independence_value(g, full_mask(g.order())) >= n;
}

Graph random_graph(int order, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i) {
      if (rng() & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(order, edges);
}

std::vector<Mask> pattern_rows(std::uint64_t code, int m) {
  std::vector<Mask> rows(m);
  for (int i = 0; i < m; ++i) rows[i] = (code >> (i * m)) & full_mask(m);
  return rows;
}

}  // namespace

EmpiricalBound ramsey_witness_search(int m, int n, int order_cap,
                                     const SearchOptions& opts) {
  if (m < 1 || n < 1) throw InvalidArgument("Ramsey search needs m, n >= 1");
  if (order_cap < 1 || order_cap > kSolverHardCap) {
    throw CapacityError("Ramsey order cap must lie in 1.." +
                        std::to_string(kSolverHardCap));
  }
  EmpiricalBound out;
  out.symbol = "R(m,n)";
  out.params = {m, n};
  std::mt19937_64 rng(opts.seed);
  for (int order = 1; order <= order_cap; ++order) {
    std::optional<Graph> counterexample;
    if (order <= kRamseyExhaustiveOrder) {
      const std::uint64_t codes = std::uint64_t{1} << pair_count(order);
      const FirstHit hit = parallel_fold<FirstHit>(
          codes, opts.jobs, [&](FirstHit& acc, std::uint64_t begin, std::uint64_t end) {
            for (std::uint64_t code = begin; code < end; ++code) {
              if (!has_clique_or_coclique(graph_from_code(order, code), m, n)) {
                acc.index = code;
                return;
              }
            }
          });
      out.candidates_checked += hit.index ? *hit.index + 1 : codes;
      if (hit.index) counterexample = graph_from_code(order, *hit.index);
    } else {
      for (std::uint64_t s = 0; s < opts.samples && !counterexample; ++s) {
        Graph g = random_graph(order, rng);
        ++out.candidates_checked;
        if (!has_clique_or_coclique(g, m, n)) counterexample = std::move(g);
      }
      if (!counterexample) {
        // Sampling found nothing; the order is undecided.
        out.observed = order;
        out.exact = false;
        return out;
      }
    }
    if (!counterexample) {
      out.observed = order;
      out.exact = true;
      return out;
    }
    out.counterexample = std::move(counterexample);
  }
  out.observed = order_cap + 1;
  out.exact = false;
  return out;
}

bool has_uniform_block(const std::vector<Mask>& rows, int m, int n) {
  if (n < 1) return true;
  if (n > m) return false;
  const Mask all = full_mask(m);
  // Gosper's hack over n-subsets of the rows.
  for (Mask pick = full_mask(n); pick <= all; ) {
    Mask ones = all;
    Mask zeros = all;
    for (Mask r = pick; r != 0; r &= r - 1) {
      const Mask row = rows[std::countr_zero(r)];
      ones &= row;
      zeros &= ~row;
    }
    if (std::popcount(ones) >= n || std::popcount(zeros & all) >= n) return true;
    const Mask low = pick & (~pick + 1);
    const Mask ripple = pick + low;
    pick = (((ripple ^ pick) >> 2) / low) | ripple;
  }
  return false;
}

Graph pattern_graph(const std::vector<Mask>& rows, int m) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if ((rows[i] >> j) & 1U) edges.emplace_back(i, m + j);
    }
  }
  return Graph::from_edges(2 * m, edges);
}

EmpiricalBound bipartite_ramsey_search(int n, int side_cap,
                                       const SearchOptions& opts) {
  if (n < 1) throw InvalidArgument("bipartite Ramsey search needs n >= 1");
  if (side_cap < 1) throw InvalidArgument("side cap must be positive");
  EmpiricalBound out;
  out.symbol = "BR(n)";
  out.params = {n};
  const int reach = std::min(side_cap, kBipartiteExhaustiveSide);
  for (int m = 1; m <= reach; ++m) {
    const std::uint64_t codes = std::uint64_t{1} << (m * m);
    const FirstHit hit = parallel_fold<FirstHit>(
        codes, opts.jobs, [&](FirstHit& acc, std::uint64_t begin, std::uint64_t end) {
          for (std::uint64_t code = begin; code < end; ++code) {
            if (!has_uniform_block(pattern_rows(code, m), m, n)) {
              acc.index = code;
              return;
            }
          }
        });
    out.candidates_checked += hit.index ? *hit.index + 1 : codes;
    if (!hit.index) {
      out.observed = m;
      out.exact = true;
      return out;
    }
    out.counterexample_pattern = pattern_rows(*hit.index, m);
    out.counterexample = pattern_graph(out.counterexample_pattern, m);
  }
  out.observed = reach + 1;
  out.exact = false;
  return out;
}

LemmaReport verify_lemma_bistar_reduction(int n, int p, int br,
                                          const SearchOptions& opts) {
  if (n < 1 || p < 2 || br < 1) {
    throw InvalidArgument("lemma check needs n >= 1, p >= 2, br >= 1");
  }
  if (br > kBistarVariantMaxLeaves) {
    throw CapacityError("bistar variants with more than " +
                        std::to_string(kBistarVariantMaxLeaves) +
                        " leaves per side are not enumerated");
  }
  const InducedMatcher complete_bipartite(
      generate(FamilySpec::complete_bipartite(n, n)));
  const InducedMatcher bistar(generate(FamilySpec::bistar(n, p)));

  struct Acc {
    std::uint64_t checked = 0;
    std::uint64_t via_knn = 0;
    std::uint64_t via_bistar = 0;
    std::uint64_t violations = 0;
    std::optional<std::uint64_t> first;

    void merge(const Acc& later) {
      checked += later.checked;
      via_knn += later.via_knn;
      via_bistar += later.via_bistar;
      violations += later.violations;
      if (!first) first = later.first;
    }
  };
  const std::uint64_t patterns = std::uint64_t{1} << (br * br);
  const Acc acc = parallel_fold<Acc>(
      patterns, opts.jobs, [&](Acc& a, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t pattern = begin; pattern < end; ++pattern) {
          const Graph g = bistar_variant(br, p, pattern);
          ++a.checked;
          if (complete_bipartite.find(g)) {
            ++a.via_knn;
          } else if (bistar.find(g)) {
            ++a.via_bistar;
          } else {
            ++a.violations;
            if (!a.first) a.first = pattern;
            return;
          }
        }
      });
  LemmaReport out;
  out.n = n;
  out.p = p;
  out.br = br;
  out.members_checked = acc.checked;
  out.via_complete_bipartite = acc.via_knn;
  out.via_bistar = acc.via_bistar;
  out.violations = acc.violations;
  if (acc.first) {
    out.first_violation_pattern = acc.first;
    out.first_violation = bistar_variant(br, p, *acc.first);
  }
  return out;
}

namespace {

bool passes(const Graph& g, const CorpusFilter& filter) {
  return !filter.connected_only || is_connected(g);
}

}  // namespace

ZverovichReport zverovich_audit(const Corpus& corpus, int k,
                                const CorpusFilter& filter,
                                const SearchOptions& opts) {
  if (k < 3) throw InvalidArgument("Zverovich audit needs k >= 3");
  const int leaves = k - 1;
  struct Acc {
    std::uint64_t seen = 0;
    std::uint64_t checked = 0;
    std::uint64_t tight = 0;
    std::uint64_t violations = 0;
    std::optional<std::uint64_t> first;
    std::map<int, int> max_i;

    void merge(const Acc& later) {
      seen += later.seen;
      checked += later.checked;
      tight += later.tight;
      violations += later.violations;
      if (!first) first = later.first;
      for (const auto& [gamma, i] : later.max_i) {
        int& slot = max_i[gamma];
        slot = std::max(slot, i);
      }
    }
  };
  const Acc acc = parallel_fold<Acc>(
      corpus.size(), opts.jobs,
      [&](Acc& a, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t index = begin; index < end; ++index) {
          const Graph g = corpus.at(index);
          ++a.seen;
          if (g.order() == 0 || !passes(g, filter)) continue;
          if (find_bistar_variant(g, leaves, 2)) continue;
          ++a.checked;
          const int gamma = domination_number(g).value;
          const int i = independent_domination(g).value;
          const int bound = gamma * (k - 2) - (k - 3);
          int& slot = a.max_i[gamma];
          slot = std::max(slot, i);
          if (i == bound) ++a.tight;
          if (i > bound) {
            ++a.violations;
            a.first = index;
            return;
          }
        }
      });
  ZverovichReport out;
  out.k = k;
  out.graphs_seen = acc.seen;
  out.graphs_checked = acc.checked;
  out.tight = acc.tight;
  out.violations = acc.violations;
  out.max_i_by_gamma = acc.max_i;
  if (acc.first) {
    out.first_violation_index = acc.first;
    out.first_violation = corpus.at(*acc.first);
  }
  return out;
}

KonigReport konig_audit(const Corpus& corpus, bool skip_non_bipartite,
                        const CorpusFilter& filter, const SearchOptions& opts) {
  struct Acc {
    std::uint64_t seen = 0;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;
    std::uint64_t violations = 0;
    std::optional<std::uint64_t> first;
    std::optional<std::uint64_t> first_non_bipartite;

    void merge(const Acc& later) {
      seen += later.seen;
      checked += later.checked;
      skipped += later.skipped;
      violations += later.violations;
      if (!first) first = later.first;
      if (!first_non_bipartite) first_non_bipartite = later.first_non_bipartite;
    }
  };
  const Acc acc = parallel_fold<Acc>(
      corpus.size(), opts.jobs,
      [&](Acc& a, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t index = begin; index < end; ++index) {
          const Graph g = corpus.at(index);
          ++a.seen;
          if (!passes(g, filter)) continue;
          const auto sides = bipartition(g);
          if (!sides) {
            ++a.skipped;
            if (!a.first_non_bipartite) a.first_non_bipartite = index;
            continue;
          }
          ++a.checked;
          const int alpha = independence_value(g, full_mask(g.order()));
          const int nu =
              bipartite_matching_number(BipartiteView(g, sides->first, sides->second));
          if (alpha + nu != g.order()) {
            ++a.violations;
            a.first = index;
            return;
          }
        }
      });
  if (acc.first_non_bipartite && !skip_non_bipartite) {
    throw PreconditionError("corpus graph #" +
                            std::to_string(*acc.first_non_bipartite) +
                            " is not bipartite");
  }
  KonigReport out;
  out.graphs_seen = acc.seen;
  out.bipartite_checked = acc.checked;
  out.skipped_non_bipartite = acc.skipped;
  out.violations = acc.violations;
  if (acc.first) {
    out.first_violation_index = acc.first;
    out.first_violation = corpus.at(*acc.first);
  }
  return out;
}

EmpiricalBound lozin_q_profile(int n, const Corpus& corpus,
                               const SearchOptions& opts) {
  if (n < 1) throw InvalidArgument("q(n) profile needs n >= 1");
  std::vector<std::pair<int, int>> matching;
  for (int k = 0; k < n; ++k) matching.emplace_back(2 * k, 2 * k + 1);
  const InducedMatcher induced_matching(Graph::from_edges(2 * n, matching));
  const InducedMatcher complete_bipartite(
      generate(FamilySpec::complete_bipartite(n, n)));

  struct Acc {
    std::uint64_t checked = 0;
    int best = -1;
    std::optional<std::uint64_t> best_index;

    void merge(const Acc& later) {
      checked += later.checked;
      if (later.best > best) {
        best = later.best;
        best_index = later.best_index;
      }
    }
  };
  const Acc acc = parallel_fold<Acc>(
      corpus.size(), opts.jobs,
      [&](Acc& a, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t index = begin; index < end; ++index) {
          const Graph g = corpus.at(index);
          ++a.checked;
          const auto sides = bipartition(g);
          if (!sides) continue;
          if (induced_matching.find(g) || complete_bipartite.find(g)) continue;
          const int nu =
              bipartite_matching_number(BipartiteView(g, sides->first, sides->second));
          if (nu > a.best) {
            a.best = nu;
            a.best_index = index;
          }
        }
      });
  EmpiricalBound out;
  out.symbol = "q(n)";
  out.params = {n};
  out.observed = acc.best < 0 ? 1 : acc.best + 1;
  out.exact = false;
  out.candidates_checked = acc.checked;
  if (acc.best_index) out.counterexample = corpus.at(*acc.best_index);
  return out;
}

std::optional<int> ScanResult::cumulative_max(int order) const {
  std::optional<int> best;
  for (const auto& [o, stats] : per_order) {
    if (o > order) break;
    best = std::max(best.value_or(stats.max), stats.max);
  }
  return best;
}

bool ScanResult::flat_tail() const {
  if (per_order.size() < 2) return false;
  const auto last = std::prev(per_order.end());
  const auto before = std::prev(last);
  return cumulative_max(last->first) == cumulative_max(before->first);
}

int ScanResult::overall_max() const {
  int best = 0;
  for (const auto& [o, stats] : per_order) best = std::max(best, stats.max);
  return best;
}

namespace {

// One forbidden member, shared by every request that lists it.
struct MemberTest {
  std::optional<InducedMatcher> matcher;
  std::optional<BistarVariants> rule;

  bool contained_in(const Graph& g) const {
    if (matcher) return matcher->find(g).has_value();
    return find_bistar_variant(g, rule->n, rule->p).has_value();
  }
};

std::string member_key(const FamilyMember& member) {
  if (const auto* graph = std::get_if<Graph>(&member.definition)) {
    return "g:" + emit_graph6(*graph);
  }
  return "m:" + member.label;
}

}  // namespace

std::vector<ScanResult> bound_profiles(const Corpus& corpus,
                                       const std::vector<ProfileRequest>& requests,
                                       const SearchOptions& opts) {
  std::vector<MemberTest> tests;
  std::unordered_map<std::string, int> slot_of;
  std::vector<std::vector<int>> request_members(requests.size());
  for (std::size_t r = 0; r < requests.size(); ++r) {
    for (const FamilyMember& member : requests[r].family.members()) {
      const std::string key = member_key(member);
      auto [it, fresh] = slot_of.emplace(key, static_cast<int>(tests.size()));
      if (fresh) {
        MemberTest t;
        if (const auto* graph = std::get_if<Graph>(&member.definition)) {
          t.matcher.emplace(*graph);
        } else if (const auto* spec = std::get_if<FamilySpec>(&member.definition)) {
          t.matcher.emplace(generate(*spec));
        } else {
          t.rule = std::get<BistarVariants>(member.definition);
        }
        tests.push_back(std::move(t));
      }
      request_members[r].push_back(it->second);
    }
  }

  struct Acc {
    std::uint64_t seen = 0;
    std::vector<std::map<int, OrderStats>> per_request;

    void merge(const Acc& later) {
      seen += later.seen;
      if (per_request.empty()) per_request.resize(later.per_request.size());
      for (std::size_t r = 0; r < later.per_request.size(); ++r) {
        for (const auto& [order, stats] : later.per_request[r]) {
          auto [it, fresh] = per_request[r].emplace(order, stats);
          if (fresh) continue;
          OrderStats& mine = it->second;
          mine.qualifying += stats.qualifying;
          if (stats.max > mine.max) {
            mine.max = stats.max;
            mine.witness_graph6 = stats.witness_graph6;
          }
        }
      }
    }
  };

  const Acc acc = parallel_fold<Acc>(
      corpus.size(), opts.jobs,
      [&](Acc& a, std::uint64_t begin, std::uint64_t end) {
        a.per_request.resize(requests.size());
        std::vector<signed char> contains(tests.size());
        for (std::uint64_t index = begin; index < end; ++index) {
          const Graph g = corpus.at(index);
          ++a.seen;
          if (g.order() == 0 || !is_connected(g)) continue;
          std::fill(contains.begin(), contains.end(), -1);
          std::array<int, kAllParams.size()> value;
          value.fill(-1);
          for (std::size_t r = 0; r < requests.size(); ++r) {
            bool free = true;
            for (int t : request_members[r]) {
              if (contains[t] < 0) contains[t] = tests[t].contained_in(g) ? 1 : 0;
              if (contains[t] == 1) {
                free = false;
                break;
              }
            }
            if (!free) continue;
            const int slot = param_index(requests[r].param);
            if (value[slot] < 0) value[slot] = compute(g, requests[r].param).value;
            auto [it, fresh] = a.per_request[r].try_emplace(g.order());
            OrderStats& stats = it->second;
            ++stats.qualifying;
            if (fresh || value[slot] > stats.max) {
              stats.max = value[slot];
              stats.witness_graph6 = emit_graph6(g);
            }
          }
        }
      });

  std::vector<ScanResult> out;
  for (std::size_t r = 0; r < requests.size(); ++r) {
    ScanResult result;
    result.family = requests[r].family.label();
    result.param = requests[r].param;
    result.graphs_seen = acc.seen;
    if (r < acc.per_request.size()) result.per_order = acc.per_request[r];
    out.push_back(std::move(result));
  }
  return out;
}

ScanResult bound_profile(const Corpus& corpus, const ForbiddenFamily& fam,
                         Param param, const SearchOptions& opts) {
  return bound_profiles(corpus, {ProfileRequest{fam, param}}, opts).front();
}

}  // namespace domchain
