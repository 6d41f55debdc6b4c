#include "domchain/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "domchain/corpus.hpp"
#include "domchain/error.hpp"
#include "domchain/families.hpp"
#include "domchain/graph_io.hpp"
#include "domchain/ramsey_lab.hpp"
#include "domchain/solvers.hpp"

namespace domchain {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ClaimCheck& c) { return c.passed; });
}

namespace {

// Violation counter for one corpus claim, remembering the earliest graph.
struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<std::uint64_t> first;

  void fail(std::uint64_t index) {
    ++violations;
    if (!first) first = index;
  }
  void merge(const Tally& later) {
    checked += later.checked;
    violations += later.violations;
    if (!first) first = later.first;
  }
};

std::string tally_detail(const Tally& t, const Corpus& corpus) {
  std::string out = std::to_string(t.checked) + " checked, " +
                    std::to_string(t.violations) + " violations";
  if (t.first) out += "; first: " + emit_graph6(corpus.at(*t.first));
  return out;
}

// Several claims checked in one pass over a corpus.
struct MultiTally {
  std::vector<Tally> claims;

  void merge(const MultiTally& later) {
    if (claims.size() < later.claims.size()) claims.resize(later.claims.size());
    for (std::size_t c = 0; c < later.claims.size(); ++c) claims[c].merge(later.claims[c]);
  }
};

using GraphCheck = std::function<void(const Graph&, std::uint64_t, std::vector<Tally>&)>;

MultiTally scan_corpus(const Corpus& corpus, std::size_t claims, int jobs,
                       const GraphCheck& check) {
  return parallel_fold<MultiTally>(
      corpus.size(), jobs,
      [&](MultiTally& acc, std::uint64_t begin, std::uint64_t end) {
        acc.claims.resize(claims);
        for (std::uint64_t index = begin; index < end; ++index) {
          check(corpus.at(index), index, acc.claims);
        }
      });
}

void add(VerifyReport& report, std::string suite, std::string id,
         std::string source, bool passed, std::string detail) {
  report.checks.push_back(
      {std::move(suite), std::move(id), std::move(source), passed, std::move(detail)});
}

// --- closed-form oracles ---------------------------------------------------

std::vector<FamilySpec> oracle_specs(int n_min, int n_max) {
  std::vector<FamilySpec> specs;
  for (int n = n_min; n <= n_max; ++n) {
    specs.push_back(FamilySpec::star_pendant(n));
    specs.push_back(FamilySpec::clique_pendant(n));
    specs.push_back(FamilySpec::complete_bipartite(n, n));
    specs.push_back(FamilySpec::star(n));
    for (int p = 2; p <= 5; ++p) specs.push_back(FamilySpec::bistar(n, p));
    specs.push_back(FamilySpec::clique_matching(n));
    specs.push_back(FamilySpec::fan(n));
    specs.push_back(FamilySpec::path(n));
    specs.push_back(FamilySpec::path(3 * n - 2));
    if (n >= 3) specs.push_back(FamilySpec::cycle(n));
    specs.push_back(FamilySpec::complete(n));
    specs.push_back(FamilySpec::empty(n));
  }
  return specs;
}

void suite_oracles(const VerifyOptions& opt, VerifyReport& report) {
  if (opt.n_min < 1 || opt.n_max < opt.n_min) {
    throw InvalidArgument("--n range must satisfy 1 <= a <= b");
  }
  struct Claim {
    std::string source;
    int instances = 0;
    std::vector<std::string> mismatches;
  };
  std::map<std::string, Claim> claims;
  std::vector<std::string> order;
  for (const FamilySpec& spec : oracle_specs(opt.n_min, opt.n_max)) {
    const Graph g = generate(spec);
    for (Param p : kAllParams) {
      const auto expected = oracle_value(spec, p);
      if (!expected) continue;
      auto [it, fresh] = claims.try_emplace(expected->claim);
      if (fresh) {
        order.push_back(expected->claim);
        it->second.source =
            expected->source == OracleSource::kQuoted ? "quoted" : "derived";
      }
      ++it->second.instances;
      const int got = compute(g, p).value;
      if (got != expected->value) {
        it->second.mismatches.push_back(to_string(spec) + ": expected " +
                                        std::to_string(expected->value) + ", got " +
                                        std::to_string(got));
      }
    }
  }
  for (const std::string& id : order) {
    const Claim& c = claims[id];
    std::string detail = std::to_string(c.instances) + " instances";
    for (const std::string& m : c.mismatches) detail += "; " + m;
    add(report, "oracles", id, c.source, c.mismatches.empty(), detail);
  }
}

// --- exhaustive chain and saturation ---------------------------------------

void suite_chain(const VerifyOptions& opt, VerifyReport& report) {
  const LabeledCorpus corpus(1, opt.max_order.value_or(6));
  const MultiTally t = scan_corpus(
      corpus, 2, opt.jobs,
      [](const Graph& g, std::uint64_t index, std::vector<Tally>& c) {
        const int ir = lower_irredundance(g).value;
        const int gamma = domination_number(g).value;
        const int i = independent_domination(g).value;
        const int alpha = independence_number(g).value;
        const int upper_gamma = upper_domination(g).value;
        const int upper_ir = upper_irredundance(g).value;
        ++c[0].checked;
        ++c[1].checked;
        if (!(ir <= gamma && gamma <= i && i <= alpha && alpha <= upper_gamma &&
              upper_gamma <= upper_ir)) {
          c[0].fail(index);
        }
        if (gamma > 2 * ir - 1) c[1].fail(index);
      });
  add(report, "chain", "ir <= gamma <= i <= alpha <= Gamma <= IR", "quoted",
      t.claims[0].violations == 0, corpus.describe() + ": " + tally_detail(t.claims[0], corpus));
  add(report, "chain", "gamma <= 2 ir - 1", "quoted", t.claims[1].violations == 0,
      corpus.describe() + ": " + tally_detail(t.claims[1], corpus));
}

// Largest independent set containing v, by listing subsets of N[v]'s
// complement.
int brute_independent_through(const Graph& g, int v) {
  const Mask rest = full_mask(g.order()) & ~g.closed_neighbors(v);
  int best = 0;
  for (Mask s = rest;; s = (s - 1) & rest) {
    if (independent_mask(g, s)) best = std::max(best, std::popcount(s));
    if (s == 0) break;
  }
  return best + 1;
}

void suite_saturation(const VerifyOptions& opt, VerifyReport& report) {
  const LabeledCorpus corpus(1, opt.max_order.value_or(6));
  const MultiTally t = scan_corpus(
      corpus, 5, opt.jobs,
      [](const Graph& g, std::uint64_t index, std::vector<Tally>& c) {
        const int ir = lower_irredundance(g).value;
        const int i = independent_domination(g).value;
        const int alpha = independence_number(g).value;
        const int upper_ir = upper_irredundance(g).value;
        const int oir = open_irredundance(g).value;
        const int is = independence_saturation(g).value;
        const int irs = irredundance_saturation(g).value;
        for (Tally& tally : c) ++tally.checked;
        if (!(i <= is && is <= alpha)) c[0].fail(index);
        if (!(ir <= irs && irs <= upper_ir)) c[1].fail(index);
        if (is > irs) c[2].fail(index);
        if (oir > upper_ir) c[3].fail(index);
        for (int v = 0; v < g.order(); ++v) {
          if (independence_saturation_at(g, v).value != brute_independent_through(g, v)) {
            c[4].fail(index);
            break;
          }
        }
      });
  const char* ids[] = {"i <= IS <= alpha", "ir <= IRS <= IR", "IS <= IRS",
                       "OIR <= IR", "IS(v) = 1 + alpha(G - N[v])"};
  for (int k = 0; k < 5; ++k) {
    add(report, "saturation", ids[k], k == 3 ? "derived" : "quoted",
        t.claims[k].violations == 0,
        corpus.describe() + ": " + tally_detail(t.claims[k], corpus));
  }
}

// --- Ramsey ----------------------------------------------------------------

void suite_ramsey(const VerifyOptions& opt, VerifyReport& report) {
  SearchOptions search;
  search.jobs = opt.jobs;
  const EmpiricalBound r33 = ramsey_witness_search(3, 3, 6, search);
  bool ok = r33.exact && r33.observed == 6 && r33.counterexample &&
            r33.counterexample->order() == 5;
  std::string detail = "R(3,3) = " + std::to_string(r33.observed) +
                       (r33.exact ? " (exhaustive)" : " (lower bound)");
  if (r33.counterexample) {
    const Graph& ce = *r33.counterexample;
    const bool clean = !contains_induced(ce, generate(FamilySpec::complete(3))) &&
                       !contains_induced(ce, generate(FamilySpec::empty(3)));
    ok = ok && clean;
    detail += "; counterexample " + emit_graph6(ce) +
              (clean ? " has no K3 and no E3" : " CONTAINS K3 or E3");
  }
  add(report, "ramsey", "R(3,3) = 6", "derived", ok, detail);

  std::string degenerate;
  bool degenerate_ok = true;
  for (int k = 1; k <= 5; ++k) {
    const int a = ramsey_witness_search(2, k, 6, search).observed;
    const int b = ramsey_witness_search(k, 2, 6, search).observed;
    degenerate_ok = degenerate_ok && a == k && b == k;
    degenerate += (degenerate.empty() ? "" : "; ") + std::string("R(2,") +
                  std::to_string(k) + ") = " + std::to_string(a) + ", R(" +
                  std::to_string(k) + ",2) = " + std::to_string(b);
  }
  add(report, "ramsey", "R(2,n) = n and R(m,2) = m", "derived", degenerate_ok,
      degenerate);
}

void suite_bipartite(const VerifyOptions& opt, VerifyReport& report) {
  SearchOptions search;
  search.jobs = opt.jobs;
  int br[3] = {0, 0, 0};
  for (int n = 1; n <= 2; ++n) {
    const EmpiricalBound b = bipartite_ramsey_search(n, kBipartiteExhaustiveSide, search);
    br[n] = b.exact ? b.observed : 0;
    std::string detail = "BR(" + std::to_string(n) + ") = " + std::to_string(b.observed) +
                         (b.exact ? " (exhaustive, " : " (lower bound, ") +
                         std::to_string(b.candidates_checked) + " patterns)";
    const bool ok = n == 1 ? (b.exact && b.observed == 1) : b.exact;
    add(report, "bipartite", "BR(" + std::to_string(n) + ") decided", "derived", ok,
        detail);
  }
  for (int n = 1; n <= 2; ++n) {
    for (int p = 2; p <= 4; ++p) {
      const std::string id = "{K" + std::to_string(n) + "," + std::to_string(n) +
                             ", BS" + std::to_string(n) + "^" + std::to_string(p) +
                             "} <= BSV" + std::to_string(br[n]) + "^" + std::to_string(p);
      if (br[n] == 0) {
        add(report, "bipartite", id, "quoted", false, "BR not decided");
        continue;
      }
      const LemmaReport lemma = verify_lemma_bistar_reduction(n, p, br[n], search);
      std::string detail = std::to_string(lemma.members_checked) + " variants, " +
                           std::to_string(lemma.via_complete_bipartite) + " via K_{n,n}, " +
                           std::to_string(lemma.via_bistar) + " via BS_n^p, " +
                           std::to_string(lemma.violations) + " violations";
      if (lemma.first_violation) detail += "; first: " + emit_graph6(*lemma.first_violation);
      add(report, "bipartite", id, "quoted", lemma.ok(), detail);
    }
  }
}

void suite_zverovich(const VerifyOptions& opt, VerifyReport& report) {
  const LabeledCorpus corpus(1, opt.max_order.value_or(7));
  SearchOptions search;
  search.jobs = opt.jobs;
  for (int k = 3; k <= 5; ++k) {
    const ZverovichReport z = zverovich_audit(corpus, k, {true}, search);
    std::string detail = "connected " + corpus.describe() + ": " +
                         std::to_string(z.graphs_checked) + " free graphs, " +
                         std::to_string(z.tight) + " tight, " +
                         std::to_string(z.violations) + " violations";
    if (z.first_violation) detail += "; first: " + emit_graph6(*z.first_violation);
    add(report, "zverovich",
        "i <= gamma(k-2) - (k-3) on BSV" + std::to_string(k - 1) + "^2-free graphs, k = " +
            std::to_string(k),
        "quoted", z.ok(), detail);
  }
}

void suite_konig(const VerifyOptions& opt, VerifyReport& report) {
  const LabeledCorpus corpus(1, opt.max_order.value_or(7));
  SearchOptions search;
  search.jobs = opt.jobs;
  const KonigReport k = konig_audit(corpus, true, {}, search);
  std::string detail = corpus.describe() + ": " + std::to_string(k.bipartite_checked) +
                       " bipartite graphs, " + std::to_string(k.violations) + " violations";
  if (k.first_violation) detail += "; first: " + emit_graph6(*k.first_violation);
  add(report, "konig", "alpha + nu = |V| on bipartite graphs", "quoted", k.ok(), detail);
}

// --- bound profiles --------------------------------------------------------

std::string profile_text(const ScanResult& s) {
  std::string out;
  for (const auto& [order, stats] : s.per_order) {
    out += (out.empty() ? "" : " ") + std::to_string(order) + ":" +
           std::to_string(stats.max);
  }
  return out.empty() ? "none qualified" : out;
}

void suite_profiles(const VerifyOptions& opt, VerifyReport& report) {
  const LabeledCorpus corpus(1, opt.max_order.value_or(7));
  SearchOptions search;
  search.jobs = opt.jobs;
  const std::vector<TheoremInstance> instances = theorem_instances_n2();
  std::vector<ProfileRequest> requests;
  for (const TheoremInstance& inst : instances) {
    requests.push_back({inst.family, inst.param});
    for (std::size_t m = 0; m < inst.family.members().size(); ++m) {
      requests.push_back({inst.family.without(m), inst.param});
    }
  }
  const std::vector<ScanResult> scans = bound_profiles(corpus, requests, search);

  std::size_t at = 0;
  bool any_growth = false;
  std::string growth;
  for (const TheoremInstance& inst : instances) {
    const ScanResult& full = scans[at++];
    add(report, "profiles", "bounded " + inst.id + " on " + inst.family.label(), "quoted",
        full.flat_tail(), "per-order max " + profile_text(full));
    for (std::size_t m = 0; m < inst.family.members().size(); ++m) {
      const ScanResult& dropped = scans[at++];
      if (dropped.overall_max() > full.overall_max()) {
        any_growth = true;
        growth += (growth.empty() ? "" : "; ") + inst.id + " without " +
                  inst.family.members()[m].label + ": " +
                  std::to_string(dropped.overall_max()) + " > " +
                  std::to_string(full.overall_max());
      }
    }
  }
  add(report, "profiles", "dropping a member raises the observed maximum", "quoted",
      any_growth, growth.empty() ? "no drop raised a maximum" : growth);
}

}  // namespace

std::vector<TheoremInstance> theorem_instances_n2() {
  const auto fam = [](std::string_view text) { return parse_forbidden_family(text); };
  return {
      {"gamma", fam("K1,2* K2* P4"), Param::kGamma},
      {"i", fam("K1,2* K2* P4 K2,2 BS2"), Param::kI},
      {"IR", fam("K1,2 K2* P4 CK2"), Param::kIR},
      {"Gamma", fam("K1,2 K2* P4 CK2"), Param::kUpperGamma},
      {"OIR", fam("K1,2* K2* P4 CK2 F2"), Param::kOIR},
      {"IS", fam("K1,2* K2* P4 K2,2 BS2"), Param::kIS},
      {"IRS", fam("K1,2* K2* P4 K2,2 CK2 BS2"), Param::kIRS},
  };
}

VerifyReport run_verify(const VerifyOptions& options) {
  using Suite = void (*)(const VerifyOptions&, VerifyReport&);
  const std::pair<std::string_view, Suite> table[] = {
      {"oracles", suite_oracles},     {"chain", suite_chain},
      {"saturation", suite_saturation}, {"ramsey", suite_ramsey},
      {"bipartite", suite_bipartite}, {"zverovich", suite_zverovich},
      {"konig", suite_konig},         {"profiles", suite_profiles},
  };
  for (const std::string& name : options.suites) {
    const bool known = std::any_of(std::begin(table), std::end(table),
                                   [&](const auto& e) { return e.first == name; });
    if (!known) throw InvalidArgument("unknown verify suite '" + name + "'");
  }
  VerifyReport report;
  for (const auto& [name, suite] : table) {
    if (!options.suites.empty() &&
        std::find(options.suites.begin(), options.suites.end(), name) ==
            options.suites.end()) {
      continue;
    }
    try {
      suite(options, report);
    } catch (const Error& e) {
      add(report, std::string(name), "suite could not run", "derived", false, e.what());
    }
  }
  return report;
}

}  // namespace domchain
