#include <gtest/gtest.h>

#include <random>

#include "domchain/corpus.hpp"
#include "domchain/error.hpp"
#include "domchain/graph_io.hpp"
#include "domchain/families.hpp"
#include "domchain/hfree.hpp"
#include "naive_oracle.hpp"
#include "test_support.hpp"

using namespace domchain;
using testing_support::family;

namespace {

ForbiddenFamily fam(std::initializer_list<const char*> specs) {
  std::vector<FamilyMember> members;
  for (const char* s : specs) members.push_back(FamilyMember::of(parse_family_spec(s)));
  return ForbiddenFamily("test", std::move(members));
}

TEST(InducedTest, DocumentedExamples) {
  EXPECT_TRUE(contains_induced(family("P5"), family("P3")));
  EXPECT_FALSE(contains_induced(family("K3,3"), family("K3")));
  EXPECT_TRUE(contains_induced(family("K2,2"), family("CK2")));
}

TEST(InducedTest, WitnessInducesPattern) {
  const Graph g = family("C7");
  const auto w = find_induced(g, family("P5"));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->size(), 5);
  EXPECT_TRUE(naive::contains_induced(induced_subgraph(g, *w), family("P5")));
  EXPECT_FALSE(find_induced(family("C5"), family("P5")).has_value());
  EXPECT_FALSE(find_induced(family("P3"), family("P4")).has_value());
  EXPECT_TRUE(find_induced(family("P3"), Graph(0)).has_value());
}

TEST(InducedTest, AgreesWithBruteForce) {
  const LabeledCorpus patterns(1, 4);
  std::vector<Graph> hs;
  for (std::uint64_t k = 0; k < patterns.size(); ++k) hs.push_back(patterns.at(k));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing_support::random_graph(rng, 1 + trial % 7, 0.5);
    for (const Graph& h : hs) {
      const auto w = find_induced(g, h);
      ASSERT_EQ(w.has_value(), naive::contains_induced(g, h));
      if (w) ASSERT_TRUE(naive::contains_induced(induced_subgraph(g, *w), h));
    }
  }
}

TEST(InducedTest, ReflexiveAndTransitive) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing_support::random_graph(rng, 7, 0.5);
    EXPECT_TRUE(contains_induced(g, g));
    const Graph h = induced_subgraph(g, VertexSet(rng() & full_mask(7)));
    const Graph k = induced_subgraph(h, VertexSet(rng() & full_mask(h.order())));
    EXPECT_TRUE(contains_induced(g, h));
    EXPECT_TRUE(contains_induced(h, k));
    EXPECT_TRUE(contains_induced(g, k));
  }
}

TEST(FreenessTest, DocumentedExamples) {
  EXPECT_TRUE(is_family_free(family("C7"), fam({"K3"})).free);
  const auto self = is_family_free(family("K1,3*"), fam({"K1,3*", "K3*", "P3"}));
  EXPECT_FALSE(self.free);
  const Graph ck3 = family("CK3");
  EXPECT_TRUE(is_family_free(ck3, fam({"K1,3", "K3*", "P6"})).free);
  for (const char* s : {"K1,3", "K3*", "P6"}) {
    EXPECT_FALSE(naive::contains_induced(ck3, family(s))) << s;
  }
}

TEST(FreenessTest, ReportsFirstContainedMember) {
  const auto r = is_family_free(family("P5"), fam({"K3", "P4", "P3"}));
  EXPECT_FALSE(r.free);
  EXPECT_EQ(r.member_index, 1u);
  EXPECT_EQ(r.witness.size(), 4);
}

TEST(FreenessTest, ParsesForbiddenFamilies) {
  const ForbiddenFamily f = parse_forbidden_family("K1,2*;K2* P4 BSV2^3");
  ASSERT_EQ(f.members().size(), 4u);
  EXPECT_EQ(f.members()[0].label, "K1,2*");
  EXPECT_TRUE(std::holds_alternative<BistarVariants>(f.members()[3].definition));
  EXPECT_EQ(std::get<BistarVariants>(f.members()[3].definition), (BistarVariants{2, 3}));
  EXPECT_EQ(f.without(0).members().size(), 3u);
  EXPECT_EQ(std::get<BistarVariants>(parse_forbidden_family("BSV2").members()[0].definition),
            (BistarVariants{2, 2}));
  EXPECT_THROW(parse_forbidden_family(" ;"), ParseError);
  EXPECT_THROW(parse_forbidden_family("P4;Q2"), ParseError);
  EXPECT_THROW(parse_forbidden_family("BSV2^1"), ParseError);
}

TEST(FamilyLeqTest, DocumentedExamples) {
  const LabeledCorpus small(1, 4);
  std::vector<FamilyMember> with_edge;
  std::vector<FamilyMember> order_two_plus;
  for (std::uint64_t k = 0; k < small.size(); ++k) {
    const Graph g = small.at(k);
    if (g.edge_count() > 0) with_edge.push_back(FamilyMember::of(g, emit_graph6(g)));
    if (g.order() >= 2) order_two_plus.push_back(FamilyMember::of(g, emit_graph6(g)));
  }
  EXPECT_TRUE(family_leq(fam({"P2"}), ForbiddenFamily("edges", with_edge)).holds);

  const LeqResult no = family_leq(fam({"K3"}), fam({"K3,3"}));
  EXPECT_FALSE(no.holds);
  ASSERT_TRUE(no.counterexample.has_value());
  EXPECT_EQ(*no.counterexample, family("K3,3"));

  EXPECT_TRUE(family_leq(fam({"K1,1", "E2"}), ForbiddenFamily("all", order_two_plus)).holds);
}

// f1 <= f2 and g f1-free imply g f2-free; <= is transitive.
TEST(FamilyLeqTest, MonotoneAndTransitive) {
  std::mt19937_64 rng(21);
  const auto random_family = [&](int size) {
    std::vector<FamilyMember> members;
    for (int k = 0; k < size; ++k) {
      members.push_back(FamilyMember::of(
          testing_support::random_graph(rng, 2 + rng() % 3, 0.5), "m" + std::to_string(k)));
    }
    return ForbiddenFamily("random", std::move(members));
  };
  int related = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const ForbiddenFamily f1 = random_family(2);
    const ForbiddenFamily f2 = random_family(2);
    const ForbiddenFamily f3 = random_family(2);
    const bool leq12 = family_leq(f1, f2).holds;
    const bool leq23 = family_leq(f2, f3).holds;
    if (leq12 && leq23) {
      ++related;
      EXPECT_TRUE(family_leq(f1, f3).holds);
    }
    if (leq12) {
      for (int k = 0; k < 5; ++k) {
        const Graph g = testing_support::random_graph(rng, 6, 0.5);
        if (is_family_free(g, f1).free) EXPECT_TRUE(is_family_free(g, f2).free);
      }
    }
  }
  EXPECT_GT(related, 0);
}

TEST(BistarDetectorTest, DocumentedExamples) {
  EXPECT_TRUE(contains_bistar_variant(family("BS2"), 2, 2));
  EXPECT_TRUE(contains_bistar_variant(family("C4"), 1, 2));
  EXPECT_FALSE(contains_bistar_variant(family("K4"), 1, 2));
  EXPECT_THROW(find_bistar_variant(family("P4"), 1, 1), PreconditionError);
}

bool contains_some_variant(const Graph& g, int n, int p) {
  bool found = false;
  enumerate_bistar_variants(n, p, [&](const Graph& member, std::uint64_t) {
    if (!found && naive::contains_induced(g, member)) found = true;
  });
  return found;
}

TEST(BistarDetectorTest, AgreesWithVariantEnumeration) {
  std::mt19937_64 rng(13);
  int positives = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const int order = 4 + trial % 5;
    const Graph g = testing_support::random_graph(rng, order, 0.25 + 0.1 * (trial % 4));
    for (int n = 1; n <= 2; ++n) {
      const auto w = find_bistar_variant(g, n, 2);
      ASSERT_EQ(w.has_value(), contains_some_variant(g, n, 2)) << emit_graph6(g) << " n=" << n;
      if (w) {
        ++positives;
        EXPECT_EQ(w->size(), 2 * n + 2);
      }
    }
    ASSERT_EQ(contains_bistar_variant(g, 1, 3), contains_some_variant(g, 1, 3));
  }
  EXPECT_GT(positives, 20);
}

TEST(BistarDetectorTest, ExhaustiveOnSmallOrders) {
  const LabeledCorpus corpus(4, 6);
  for (std::uint64_t k = 0; k < corpus.size(); k += 7) {
    const Graph g = corpus.at(k);
    ASSERT_EQ(contains_bistar_variant(g, 1, 2), contains_some_variant(g, 1, 2));
    if (g.order() >= 6) {
      ASSERT_EQ(contains_bistar_variant(g, 2, 2), contains_some_variant(g, 2, 2));
    }
  }
}

TEST(BistarVariantMemberTest, RuleExpandsToEveryVariant) {
  const FamilyMember rule = FamilyMember::of(BistarVariants{2, 2});
  EXPECT_EQ(expand(rule).size(), 16u);
  EXPECT_TRUE(find_member(family("BS2"), rule).has_value());
  EXPECT_FALSE(find_member(family("K6"), rule).has_value());
}

TEST(LongestInducedPathTest, Examples) {
  EXPECT_EQ(longest_induced_path(family("P7")), 7);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(longest_induced_path(generate(FamilySpec::complete(n))), 2);
  }
  EXPECT_EQ(longest_induced_path(family("C6")), 5);
  EXPECT_EQ(longest_induced_path(family("K1")), 1);
  EXPECT_EQ(longest_induced_path(Graph(0)), 0);
}

TEST(LongestInducedPathTest, AgreesWithMatcher) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = testing_support::random_graph(rng, 1 + trial % 8, 0.35);
    int expected = 0;
    for (int k = 1; k <= g.order(); ++k) {
      if (naive::contains_induced(g, generate(FamilySpec::path(k)))) expected = k;
    }
    ASSERT_EQ(longest_induced_path(g), expected);
  }
}

}  // namespace
