#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "domchain/families.hpp"
#include "domchain/graph.hpp"

namespace domchain {

// Backtracking matcher for one pattern graph h. Pattern vertices are placed
// in a connectivity-first order; candidates are filtered by degree and by
// consistency of adjacency masks with every vertex already placed. Reusable
// across many host graphs.
class InducedMatcher {
 public:
  explicit InducedMatcher(const Graph& pattern);

  // Vertex set S of g with g[S] isomorphic to the pattern, or nullopt.
  std::optional<VertexSet> find(const Graph& g) const;

  const Graph& pattern() const { return pattern_; }

 private:
  bool extend(const Graph& g, int depth, Mask used,
              const std::array<Mask, kWordBits>& allowed,
              std::array<int, kWordBits>& image) const;

  Graph pattern_;
  std::vector<int> order_;          // pattern vertex at each depth
  std::vector<Mask> earlier_adj_;   // depths < d adjacent to depth d
  std::vector<int> degree_;
  std::vector<int> non_degree_;
};

std::optional<VertexSet> find_induced(const Graph& g, const Graph& h);
inline bool contains_induced(const Graph& g, const Graph& h) {
  return find_induced(g, h).has_value();
}

// Induced member of the bistar-variant family with n leaves per side and a
// p-vertex centre path (p >= 2): an induced path x1..xp and independent sets
// A in N(x1), B in N(xp) of size n, with A seeing none of x2..xp, B none of
// x1..x(p-1), and any edges between A and B. Returns path | A | B.
std::optional<VertexSet> find_bistar_variant(const Graph& g, int n, int p);
inline bool contains_bistar_variant(const Graph& g, int n, int p) {
  return find_bistar_variant(g, n, p).has_value();
}

// Number of vertices of a longest induced path; 0 for the null graph.
int longest_induced_path(const Graph& g);

// The parametric rule "every member of the bistar-variant family".
struct BistarVariants {
  int n = 1;
  int p = 2;
  bool operator==(const BistarVariants&) const = default;
};

struct FamilyMember {
  std::string label;
  std::variant<Graph, FamilySpec, BistarVariants> definition;

  static FamilyMember of(Graph g, std::string label);
  static FamilyMember of(FamilySpec spec);
  static FamilyMember of(BistarVariants rule);
};

// A nonempty list of forbidden induced subgraphs.
class ForbiddenFamily {
 public:
  ForbiddenFamily(std::string label, std::vector<FamilyMember> members);

  const std::string& label() const { return label_; }
  const std::vector<FamilyMember>& members() const { return members_; }

  ForbiddenFamily without(std::size_t member_index) const;

 private:
  std::string label_;
  std::vector<FamilyMember> members_;
};

// Members separated by ';' or whitespace. Each is a family spec, or
// "BSVn^p" for the bistar-variant rule.
ForbiddenFamily parse_forbidden_family(std::string_view text);

// Witness of `member` inside g, or nullopt.
std::optional<VertexSet> find_member(const Graph& g, const FamilyMember& member);

struct FreenessResult {
  bool free = true;
  std::size_t member_index = 0;  // first contained member when !free
  VertexSet witness;
};

FreenessResult is_family_free(const Graph& g, const ForbiddenFamily& fam);

// Concrete graphs a member stands for (every variant, for the rule).
std::vector<std::pair<Graph, std::string>> expand(const FamilyMember& member);

struct LeqResult {
  bool holds = true;
  std::optional<Graph> counterexample;  // member of f2 that is f1-free
  std::string counterexample_label;
};

// f1 <= f2: every member of f2 contains some member of f1 as an induced
// subgraph.
LeqResult family_leq(const ForbiddenFamily& f1, const ForbiddenFamily& f2);

}  // namespace domchain
