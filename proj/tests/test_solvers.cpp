#include <gtest/gtest.h>

#include <random>

#include "domchain/corpus.hpp"
#include "domchain/error.hpp"
#include "domchain/graph_io.hpp"
#include "domchain/solvers.hpp"
#include "naive_oracle.hpp"
#include "test_support.hpp"

using namespace domchain;
using testing_support::family;

namespace {

TEST(SolverTest, DominationNumber) {
  EXPECT_EQ(domination_number(family("K1,5")).value, 1);
  EXPECT_EQ(domination_number(family("P4")).value, 2);
  EXPECT_EQ(domination_number(family("CK3")).value, 2);
}

TEST(SolverTest, UpperDomination) {
  EXPECT_EQ(upper_domination(family("CK4")).value, 4);
  EXPECT_EQ(upper_domination(family("E5")).value, 5);
  EXPECT_EQ(upper_domination(family("K5")).value, 1);
}

TEST(SolverTest, IndependenceNumber) {
  EXPECT_EQ(independence_number(family("K4,4")).value, 4);
  EXPECT_EQ(independence_number(family("C5")).value, 2);
  EXPECT_EQ(independence_number(family("K3*")).value, 3);
}

TEST(SolverTest, IndependentDomination) {
  EXPECT_EQ(independent_domination(family("BS3")).value, 4);
  EXPECT_EQ(independent_domination(family("K4,4")).value, 4);
  EXPECT_EQ(independent_domination(family("K1,3*")).value, 3);
}

TEST(SolverTest, LowerIrredundance) {
  EXPECT_EQ(lower_irredundance(family("K1,5")).value, 1);
  EXPECT_EQ(lower_irredundance(family("P4")).value, 2);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(lower_irredundance(generate(FamilySpec::complete(n))).value, 1);
  }
}

TEST(SolverTest, UpperIrredundance) {
  EXPECT_EQ(upper_irredundance(family("CK3")).value, 3);
  EXPECT_EQ(upper_irredundance(family("E4")).value, 4);
  EXPECT_EQ(upper_irredundance(family("K4")).value, 1);
}

TEST(SolverTest, OpenIrredundance) {
  EXPECT_EQ(open_irredundance(family("F3")).value, 3);
  EXPECT_EQ(open_irredundance(family("K1")).value, 0);
  // The closed form ceil(n/3) gives 2 here; exhaustive search finds 3.
  const Graph p6 = family("P6");
  EXPECT_EQ(open_irredundance(p6).value, naive::oir(p6));
  EXPECT_EQ(open_irredundance(p6).value, 3);
}

TEST(SolverTest, IndependenceSaturationAtVertex) {
  const Graph bs3 = family("BS3");
  EXPECT_EQ(independence_saturation_at(bs3, 0).value, 4);
  EXPECT_EQ(independence_saturation_at(bs3, 1).value, 4);
  for (int v = 0; v < 5; ++v) {
    EXPECT_EQ(independence_saturation_at(family("K5"), v).value, 1);
  }
  // An isolated vertex adds itself to a maximum independent set of the rest.
  const Graph g = disjoint_union(family("K1"), family("C5"));
  EXPECT_EQ(independence_saturation_at(g, 0).value, 1 + 2);
}

TEST(SolverTest, IndependenceSaturation) {
  EXPECT_EQ(independence_saturation(family("BS4^3")).value, 5);
  EXPECT_EQ(independence_saturation(family("K4")).value, 1);
  EXPECT_EQ(independence_saturation(family("C6")).value, 3);
}

TEST(SolverTest, IrredundanceSaturation) {
  for (int v = 0; v < 6; ++v) {
    EXPECT_EQ(irredundance_saturation_at(family("CK3"), v).value, 3);
  }
  for (int v = 0; v < 4; ++v) {
    EXPECT_EQ(irredundance_saturation_at(family("K4"), v).value, 1);
  }
  EXPECT_EQ(irredundance_saturation(family("CK5")).value, 5);
  EXPECT_EQ(irredundance_saturation(family("E3")).value, 3);
  EXPECT_EQ(irredundance_saturation(family("K3")).value, 1);
}

TEST(SolverTest, FullReportExamples) {
  const ParameterReport c5 = full_report(family("C5"));
  for (Param p : {Param::kIr, Param::kGamma, Param::kI, Param::kAlpha, Param::kUpperGamma,
                  Param::kIR}) {
    EXPECT_EQ(c5.value(p), 2) << param_name(p);
  }

  const ParameterReport k1 = full_report(family("K1"));
  for (Param p : kAllParams) {
    EXPECT_EQ(k1.value(p), p == Param::kOIR ? 0 : 1) << param_name(p);
  }

  // alpha(CK3) is 2: each clique contributes at most one vertex and matched
  // partners are adjacent, so no three vertices are independent.
  const ParameterReport ck3 = full_report(family("CK3"));
  EXPECT_EQ(ck3.value(Param::kGamma), 2);
  EXPECT_EQ(ck3.value(Param::kI), 2);
  EXPECT_EQ(ck3.value(Param::kAlpha), 2);
  EXPECT_EQ(ck3.value(Param::kAlpha), naive::alpha(family("CK3")));
  EXPECT_EQ(ck3.value(Param::kUpperGamma), 3);
  EXPECT_EQ(ck3.value(Param::kIR), 3);
  EXPECT_EQ(ck3.value(Param::kOIR), 3);
  EXPECT_EQ(ck3.order, 6);
  EXPECT_TRUE(ck3.connected);
}

TEST(SolverTest, DisconnectedInputsAreAccepted) {
  const ParameterReport r = full_report(family("2xK2"));
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(r.value(Param::kGamma), 2);
  EXPECT_EQ(r.value(Param::kAlpha), 2);
}

TEST(SolverTest, OrderLimits) {
  EXPECT_THROW(domination_number(Graph(0)), PreconditionError);
  EXPECT_THROW(full_report(Graph(0)), PreconditionError);
  EXPECT_THROW(domination_number(Graph(33)), CapacityError);

  std::vector<std::string> warnings;
  set_solver_warning_handler([&](const std::string& w) { warnings.push_back(w); });
  EXPECT_EQ(domination_number(Graph(25)).value, 25);
  EXPECT_EQ(warnings.size(), 1u);
  EXPECT_EQ(domination_number(Graph(24)).value, 24);
  EXPECT_EQ(warnings.size(), 1u);
  set_solver_warning_handler({});
  EXPECT_EQ(domination_number(Graph(26)).value, 26);
  set_solver_warning_handler(nullptr);
}

TEST(SolverTest, WitnessesAreSmallestMasks) {
  // P4 0-1-2-3: dominating pairs are {0,2}, {0,3}, {1,2}, {1,3}; smallest
  // mask is {0,2}.
  EXPECT_EQ(domination_number(family("P4")).witness, VertexSet::of({0, 2}));
  EXPECT_EQ(independence_number(family("P4")).witness, VertexSet::of({0, 2}));
  EXPECT_EQ(independence_saturation(family("P4")).vertex, 0);
}

// Checks every witness of a report against the naive predicates.
void expect_witnesses_certify(const Graph& g, const ParameterReport& r) {
  using naive::Set;
  const auto w = [&](Param p) { return r.witness(p).mask(); };
  const auto size = [&](Param p) { return r.witness(p).size(); };
  for (Param p : kAllParams) EXPECT_EQ(size(p), r.value(p)) << param_name(p);
  EXPECT_TRUE(naive::dominating(g, w(Param::kGamma)));
  EXPECT_TRUE(naive::minimal_dominating(g, w(Param::kUpperGamma)));
  EXPECT_TRUE(naive::maximal_independent(g, w(Param::kI)));
  EXPECT_TRUE(naive::independent(g, w(Param::kAlpha)));
  EXPECT_TRUE(naive::maximal_irredundant(g, w(Param::kIr)));
  EXPECT_TRUE(naive::irredundant(g, w(Param::kIR)));
  EXPECT_TRUE(naive::open_irredundant(g, w(Param::kOIR)));
  EXPECT_TRUE(naive::independent(g, w(Param::kIS)));
  EXPECT_TRUE(naive::in(w(Param::kIS), r.is_vertex));
  EXPECT_TRUE(naive::irredundant(g, w(Param::kIRS)));
  EXPECT_TRUE(naive::in(w(Param::kIRS), r.irs_vertex));
  EXPECT_EQ(naive::is_at(g, r.is_vertex), r.value(Param::kIS));
  EXPECT_EQ(naive::irs_at(g, r.irs_vertex), r.value(Param::kIRS));
}

TEST(SolverPropertyTest, MatchesBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> order(1, 10);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = testing_support::random_graph(rng, order(rng), density(rng));
    const ParameterReport r = full_report(g);
    for (Param p : kAllParams) {
      ASSERT_EQ(r.value(p), naive::value(g, p))
          << param_name(p) << " on " << trial << " order " << g.order();
    }
    expect_witnesses_certify(g, r);
  }
}

TEST(SolverPropertyTest, ChainHoldsOnEveryGraphUpToOrderSix) {
  const LabeledCorpus corpus(1, 6);
  for (std::uint64_t k = 0; k < corpus.size(); ++k) {
    const Graph g = corpus.at(k);
    const ParameterReport r = full_report(g);
    ASSERT_EQ(check_report_invariants(r), "") << emit_graph6(g);
    const int ir = r.value(Param::kIr);
    ASSERT_LE(r.value(Param::kGamma), 2 * ir - 1);
    ASSERT_LE(r.value(Param::kOIR), r.value(Param::kIR));
  }
}

TEST(SolverPropertyTest, SaturationIdentityUpToOrderSix) {
  const LabeledCorpus corpus(1, 6);
  for (std::uint64_t k = 0; k < corpus.size(); ++k) {
    const Graph g = corpus.at(k);
    for (int v = 0; v < g.order(); ++v) {
      const Mask rest = g.vertices().mask() & ~g.closed_neighbors(v);
      ASSERT_EQ(independence_saturation_at(g, v).value,
                1 + max_independent_within(g, rest).value);
      ASSERT_EQ(independence_value(g, rest), max_independent_within(g, rest).value);
    }
  }
}

// Gamma is the largest dominating irredundant set, and gamma over all
// dominating sets equals gamma over minimal ones.
TEST(SolverPropertyTest, SimplifyingLemmasHold) {
  const LabeledCorpus corpus(1, 6);
  for (std::uint64_t k = 0; k < corpus.size(); k += 3) {
    const Graph g = corpus.at(k);
    int min_dom = 64;
    int max_dom_irr = 0;
    int max_indep = 0;
    for (Mask s = 0; s <= full_mask(g.order()); ++s) {
      if (naive::dominating(g, s)) min_dom = std::min(min_dom, std::popcount(s));
      if (naive::dominating(g, s) && naive::irredundant(g, s)) {
        max_dom_irr = std::max(max_dom_irr, std::popcount(s));
      }
      if (naive::independent(g, s)) max_indep = std::max(max_indep, std::popcount(s));
    }
    ASSERT_EQ(min_dom, naive::gamma(g));
    ASSERT_EQ(max_dom_irr, naive::upper_gamma(g));
    ASSERT_EQ(max_indep, naive::alpha(g));
  }
}

TEST(SolverTest, InvariantCheckerNamesViolations) {
  ParameterReport r = full_report(family("P5"));
  EXPECT_EQ(check_report_invariants(r), "");
  r.values[param_index(Param::kGamma)] = r.value(Param::kI) + 1;
  EXPECT_NE(check_report_invariants(r), "");
}

}  // namespace
