#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domchain/graph.hpp"
#include "domchain/parameter.hpp"

namespace domchain {

enum class FamilyKind {
  kPath,               // P_n
  kCycle,              // C_n, n >= 3
  kComplete,           // K_n
  kEmpty,              // E_n
  kCompleteBipartite,  // K_{s,t}
  kStarPendant,        // K_{1,n}*: a pendant on every leaf of K_{1,n}
  kCliquePendant,      // K_n*: a pendant on every vertex of K_n
  kCliqueMatching,     // CK_n: two K_n joined by a perfect matching
  kBistar,             // BS_n^p: two n-leaf stars, centres joined by P_p
  kFan,                // F_n: a universal vertex over nK_2
  kDisjointCopies,     // count copies of an inner family member
};

// A named graph family member. `params` holds n; (s, t) for K_{s,t};
// (n, p) for BS_n^p; (count) for disjoint copies, with the copied member in
// `inner`.
struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  std::vector<int> params;
  std::vector<FamilySpec> inner;

  static FamilySpec path(int n) { return {FamilyKind::kPath, {n}, {}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::kCycle, {n}, {}}; }
  static FamilySpec complete(int n) { return {FamilyKind::kComplete, {n}, {}}; }
  static FamilySpec empty(int n) { return {FamilyKind::kEmpty, {n}, {}}; }
  static FamilySpec complete_bipartite(int s, int t) {
    return {FamilyKind::kCompleteBipartite, {s, t}, {}};
  }
  static FamilySpec star(int n) { return complete_bipartite(1, n); }
  static FamilySpec star_pendant(int n) {
    return {FamilyKind::kStarPendant, {n}, {}};
  }
  static FamilySpec clique_pendant(int n) {
    return {FamilyKind::kCliquePendant, {n}, {}};
  }
  static FamilySpec clique_matching(int n) {
    return {FamilyKind::kCliqueMatching, {n}, {}};
  }
  static FamilySpec bistar(int n, int p = 2) {
    return {FamilyKind::kBistar, {n, p}, {}};
  }
  static FamilySpec fan(int n) { return {FamilyKind::kFan, {n}, {}}; }
  static FamilySpec copies(int count, FamilySpec inner) {
    return {FamilyKind::kDisjointCopies, {count}, {std::move(inner)}};
  }

  bool operator==(const FamilySpec&) const = default;
};

// Throws InvalidArgument when the arity or a parameter is out of range.
void validate(const FamilySpec& spec);

// Grammar (n, s, t, p, c positive integers):
//   Pn  Cn  Kn  En  Ks,t  K1,n*  Kn*  CKn  BSn  BSn^p  Fn  cxSPEC
// "BSn" abbreviates BSn^2; "K1,n" is the star K_{1,n}.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
inline constexpr std::string_view kFamilyGrammar =
    "Pn | Cn | Kn | En | Ks,t | K1,n* | Kn* | CKn | BSn | BSn^p | Fn | cxSPEC";

// Vertex layout, fixed per kind: path vertices in order; K_{s,t} side s
// first; K_{1,n}*: centre 0, leaves 1..n, pendant n+i on leaf i; K_n*: clique
// 0..n-1, pendant n+i on i; CK_n: cliques 0..n-1 and n..2n-1, i ~ n+i;
// BS_n^p: path 0..p-1 (centres 0 and p-1), leaves of 0 at p..p+n-1, leaves of
// p-1 at p+n..p+2n-1; F_n: hub 0, triangles {0, 2i+1, 2i+2}; copies are
// concatenated.
Graph generate(const FamilySpec& spec);

// Order of generate(spec) without building it.
int family_order(const FamilySpec& spec);

enum class OracleSource { kQuoted, kDerived };

struct OracleValue {
  int value = 0;
  OracleSource source = OracleSource::kDerived;
  std::string claim;  // the closed form the value comes from
};

// Closed-form parameter values. Quoted entries are the values the
// boundedness arguments quote; derived entries are textbook values added for
// cross-checks. nullopt when the table has no entry.
std::optional<OracleValue> oracle_value(const FamilySpec& spec, Param param);

// Largest n for which the 2^(n*n) bistar variants may be enumerated.
inline constexpr int kBistarVariantMaxLeaves = 5;

// Calls visit(graph, pattern) once for every member of the bistar-variant
// family: BS_n^p plus any subset of the n*n cross edges between the two leaf
// sets. Bit i*n+j of `pattern` joins leaf i of centre 0 to leaf j of centre
// p-1. Patterns run from 0 upward. Returns the member count.
std::uint64_t enumerate_bistar_variants(
    int n, int p,
    const std::function<void(const Graph&, std::uint64_t)>& visit);

// Member with a given cross-edge pattern.
Graph bistar_variant(int n, int p, std::uint64_t pattern);

}  // namespace domchain
