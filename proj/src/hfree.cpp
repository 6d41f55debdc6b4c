#include "domchain/hfree.hpp"

#include <algorithm>
#include <cctype>

#include "domchain/solvers.hpp"

namespace domchain {

InducedMatcher::InducedMatcher(const Graph& pattern) : pattern_(pattern) {
  const int k = pattern.order();
  Mask placed = 0;
  for (int depth = 0; depth < k; ++depth) {
    // Most neighbours among placed vertices, then highest degree, then lowest
    // index.
    int pick = -1;
    int pick_links = -1;
    int pick_degree = -1;
    for (int u = 0; u < k; ++u) {
      if (placed & bit(u)) continue;
      const int links = std::popcount(pattern.neighbors(u) & placed);
      const int degree = pattern.degree(u);
      if (links > pick_links || (links == pick_links && degree > pick_degree)) {
        pick = u;
        pick_links = links;
        pick_degree = degree;
      }
    }
    Mask earlier = 0;
    for (int d = 0; d < depth; ++d) {
      if (pattern.adjacent(pick, order_[d])) earlier |= bit(d);
    }
    order_.push_back(pick);
    earlier_adj_.push_back(earlier);
    degree_.push_back(pattern.degree(pick));
    non_degree_.push_back(k - 1 - pattern.degree(pick));
    placed |= bit(pick);
  }
}

std::optional<VertexSet> InducedMatcher::find(const Graph& g) const {
  const int k = pattern_.order();
  if (k > g.order()) return std::nullopt;
  if (k == 0) return VertexSet();
  std::array<Mask, kWordBits> allowed{};
  for (int depth = 0; depth < k; ++depth) {
    Mask ok = 0;
    for (int x = 0; x < g.order(); ++x) {
      const int d = g.degree(x);
      if (d >= degree_[depth] && g.order() - 1 - d >= non_degree_[depth]) {
        ok |= bit(x);
      }
    }
    if (ok == 0) return std::nullopt;
    allowed[depth] = ok;
  }
  std::array<int, kWordBits> image{};
  if (!extend(g, 0, 0, allowed, image)) return std::nullopt;
  Mask out = 0;
  for (int depth = 0; depth < k; ++depth) out |= bit(image[depth]);
  return VertexSet(out);
}

bool InducedMatcher::extend(const Graph& g, int depth, Mask used,
                            const std::array<Mask, kWordBits>& allowed,
                            std::array<int, kWordBits>& image) const {
  if (depth == pattern_.order()) return true;
  Mask cand = allowed[depth] & ~used;
  const Mask earlier = earlier_adj_[depth];
  for (int d = 0; d < depth && cand != 0; ++d) {
    const Mask row = g.neighbors(image[d]);
    cand &= (earlier & bit(d)) ? row : ~row;
  }
  for (; cand != 0; cand &= cand - 1) {
    const int x = std::countr_zero(cand);
    image[depth] = x;
    if (extend(g, depth + 1, used | bit(x), allowed, image)) return true;
  }
  return false;
}

std::optional<VertexSet> find_induced(const Graph& g, const Graph& h) {
  return InducedMatcher(h).find(g);
}

namespace {

// Keeps the n lowest vertices of an independent set.
Mask lowest(Mask s, int n) {
  Mask out = 0;
  for (int k = 0; k < n && s != 0; ++k, s &= s - 1) out |= s & (~s + 1);
  return out;
}

class BistarVariantSearch {
 public:
  BistarVariantSearch(const Graph& g, int n, int p) : g_(g), n_(n), p_(p) {}

  std::optional<VertexSet> run() {
    for (int start = 0; start < g_.order(); ++start) {
      path_[0] = start;
      if (grow(1, bit(start))) {
        return VertexSet(found_);
      }
    }
    return std::nullopt;
  }

 private:
  // The next vertex must see the current end and nothing earlier.
  bool grow(int length, Mask on_path) {
    if (length == p_) return check(on_path);
    const int end = path_[length - 1];
    const Mask before_end = closed_before(length - 1);
    for (Mask rest = g_.neighbors(end) & ~on_path & ~before_end; rest != 0;
         rest &= rest - 1) {
      const int x = std::countr_zero(rest);
      path_[length] = x;
      if (grow(length + 1, on_path | bit(x))) {
        return true;
      }
    }
    return false;
  }

  // Union of N[] over path_[0..upto-1].
  Mask closed_before(int upto) const {
    Mask m = 0;
    for (int k = 0; k < upto; ++k) m |= g_.closed_neighbors(path_[k]);
    return m;
  }

  bool check(Mask on_path) {
    const int first = path_[0];
    const int last = path_[p_ - 1];
    Mask far_from_first = 0;  // N[] of x2..xp
    Mask far_from_last = 0;   // N[] of x1..x(p-1)
    for (int k = 0; k < p_; ++k) {
      const Mask closed = g_.closed_neighbors(path_[k]);
      if (k > 0) far_from_first |= closed;
      if (k < p_ - 1) far_from_last |= closed;
    }
    const Mask cand_a = g_.neighbors(first) & ~far_from_first;
    const Mask cand_b = g_.neighbors(last) & ~far_from_last;
    if (std::popcount(cand_a) < n_ || std::popcount(cand_b) < n_) return false;
    if (independence_value(g_, cand_a) < n_) return false;
    if (independence_value(g_, cand_b) < n_) return false;
    const Mask a = lowest(max_independent_within(g_, cand_a).witness.mask(), n_);
    const Mask b = lowest(max_independent_within(g_, cand_b).witness.mask(), n_);
    found_ = on_path | a | b;
    return true;
  }

  const Graph& g_;
  int n_;
  int p_;
  std::array<int, kWordBits> path_{};
  Mask found_ = 0;
};

}  // namespace

std::optional<VertexSet> find_bistar_variant(const Graph& g, int n, int p) {
  if (n < 1 || p < 2) {
    throw PreconditionError("bistar variant search needs n >= 1 and p >= 2");
  }
  if (g.order() < 2 * n + p) return std::nullopt;
  return BistarVariantSearch(g, n, p).run();
}

namespace {

int longest_from(const Graph& g, int end, Mask on_path, Mask blocked) {
  int best = std::popcount(on_path);
  for (Mask rest = g.neighbors(end) & ~blocked; rest != 0; rest &= rest - 1) {
    const int x = std::countr_zero(rest);
    // x may only touch `end` on the path; blocked holds N[] of the earlier
    // path vertices.
    best = std::max(best, longest_from(g, x, on_path | bit(x),
                                       blocked | g.closed_neighbors(end)));
  }
  return best;
}

}  // namespace

int longest_induced_path(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    best = std::max(best, longest_from(g, v, bit(v), bit(v)));
    if (best == g.order()) break;
  }
  return best;
}

FamilyMember FamilyMember::of(Graph g, std::string label) {
  return {std::move(label), std::move(g)};
}

FamilyMember FamilyMember::of(FamilySpec spec) {
  validate(spec);
  std::string label = to_string(spec);
  return {std::move(label), std::move(spec)};
}

FamilyMember FamilyMember::of(BistarVariants rule) {
  if (rule.n < 1 || rule.p < 2) {
    throw InvalidArgument("bistar variant rule needs n >= 1 and p >= 2");
  }
  return {"BSV" + std::to_string(rule.n) + "^" + std::to_string(rule.p), rule};
}

ForbiddenFamily::ForbiddenFamily(std::string label,
                                 std::vector<FamilyMember> members)
    : label_(std::move(label)), members_(std::move(members)) {
  if (members_.empty()) throw InvalidArgument("forbidden family is empty");
}

ForbiddenFamily ForbiddenFamily::without(std::size_t member_index) const {
  std::vector<FamilyMember> rest;
  std::string label;
  for (std::size_t k = 0; k < members_.size(); ++k) {
    if (k == member_index) continue;
    rest.push_back(members_[k]);
    label += (label.empty() ? "" : ";") + members_[k].label;
  }
  return ForbiddenFamily("{" + label + "}", std::move(rest));
}

ForbiddenFamily parse_forbidden_family(std::string_view text) {
  std::vector<FamilyMember> members;
  std::string label;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() &&
           (text[pos] == ';' || std::isspace(static_cast<unsigned char>(text[pos])))) {
      ++pos;
    }
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && text[end] != ';' &&
           !std::isspace(static_cast<unsigned char>(text[end]))) {
      ++end;
    }
    const std::string_view token = text.substr(pos, end - pos);
    if (token.starts_with("BSV")) {
      // BSVn^p; reuse the spec grammar for the numbers.
      const FamilySpec shape = parse_family_spec("BS" + std::string(token.substr(3)));
      if (shape.params[1] < 2) {
        throw ParseError("bistar variant rule needs p >= 2", pos);
      }
      members.push_back(FamilyMember::of(BistarVariants{shape.params[0], shape.params[1]}));
    } else {
      members.push_back(FamilyMember::of(parse_family_spec(token)));
    }
    label += (label.empty() ? "" : ";") + members.back().label;
    pos = end;
  }
  if (members.empty()) throw ParseError("forbidden family is empty", 0);
  return ForbiddenFamily("{" + label + "}", std::move(members));
}

std::optional<VertexSet> find_member(const Graph& g, const FamilyMember& member) {
  if (const auto* graph = std::get_if<Graph>(&member.definition)) {
    return find_induced(g, *graph);
  }
  if (const auto* spec = std::get_if<FamilySpec>(&member.definition)) {
    if (family_order(*spec) > g.order()) return std::nullopt;
    return find_induced(g, generate(*spec));
  }
  const auto& rule = std::get<BistarVariants>(member.definition);
  return find_bistar_variant(g, rule.n, rule.p);
}

FreenessResult is_family_free(const Graph& g, const ForbiddenFamily& fam) {
  for (std::size_t k = 0; k < fam.members().size(); ++k) {
    if (auto witness = find_member(g, fam.members()[k])) {
      return {false, k, *witness};
    }
  }
  return {};
}

std::vector<std::pair<Graph, std::string>> expand(const FamilyMember& member) {
  std::vector<std::pair<Graph, std::string>> out;
  if (const auto* graph = std::get_if<Graph>(&member.definition)) {
    out.emplace_back(*graph, member.label);
  } else if (const auto* spec = std::get_if<FamilySpec>(&member.definition)) {
    out.emplace_back(generate(*spec), member.label);
  } else {
    const auto& rule = std::get<BistarVariants>(member.definition);
    enumerate_bistar_variants(rule.n, rule.p,
                              [&](const Graph& g, std::uint64_t pattern) {
                                out.emplace_back(g, member.label + "#" +
                                                        std::to_string(pattern));
                              });
  }
  return out;
}

LeqResult family_leq(const ForbiddenFamily& f1, const ForbiddenFamily& f2) {
  for (const FamilyMember& upper : f2.members()) {
    for (const auto& [graph, label] : expand(upper)) {
      bool covered = false;
      for (const FamilyMember& lower : f1.members()) {
        if (find_member(graph, lower)) {
          covered = true;
          break;
        }
      }
      if (!covered) return {false, graph, label};
    }
  }
  return {};
}

}  // namespace domchain
