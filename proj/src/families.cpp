#include "domchain/families.hpp"

#include <cctype>
#include <charconv>

namespace domchain {

namespace {

std::size_t arity(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kCompleteBipartite:
    case FamilyKind::kBistar:
      return 2;
    default:
      return 1;
  }
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Builder over a fixed-size adjacency.
class Edges {
 public:
  explicit Edges(int order) : order_(order) {
    if (order > kWordBits) {
      throw CapacityError("family member of order " + std::to_string(order) +
                          " exceeds " + std::to_string(kWordBits));
    }
  }
  void add(int u, int v) { edges_.emplace_back(u, v); }
  void clique(int first, int count) {
    for (int a = 0; a < count; ++a) {
      for (int b = a + 1; b < count; ++b) add(first + a, first + b);
    }
  }
  Graph build() const { return Graph::from_edges(order_, edges_); }

 private:
  int order_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace

void validate(const FamilySpec& spec) {
  if (spec.params.size() != arity(spec.kind)) {
    throw InvalidArgument("family " + std::string(kFamilyGrammar) +
                          ": wrong number of parameters");
  }
  for (int p : spec.params) {
    if (p < 1) throw InvalidArgument("family parameters must be positive");
  }
  if (spec.kind == FamilyKind::kCycle && spec.params[0] < 3) {
    throw InvalidArgument("cycle needs at least 3 vertices");
  }
  if (spec.kind == FamilyKind::kDisjointCopies) {
    if (spec.inner.size() != 1) {
      throw InvalidArgument("disjoint copies need exactly one inner member");
    }
    validate(spec.inner.front());
  } else if (!spec.inner.empty()) {
    throw InvalidArgument("only disjoint copies take an inner member");
  }
}

int family_order(const FamilySpec& spec) {
  validate(spec);
  const auto& q = spec.params;
  switch (spec.kind) {
    case FamilyKind::kPath:
    case FamilyKind::kCycle:
    case FamilyKind::kComplete:
    case FamilyKind::kEmpty:
      return q[0];
    case FamilyKind::kCompleteBipartite:
      return q[0] + q[1];
    case FamilyKind::kStarPendant:
    case FamilyKind::kFan:
      return 2 * q[0] + 1;
    case FamilyKind::kCliquePendant:
    case FamilyKind::kCliqueMatching:
      return 2 * q[0];
    case FamilyKind::kBistar:
      return 2 * q[0] + q[1];
    case FamilyKind::kDisjointCopies:
      return q[0] * family_order(spec.inner.front());
  }
  return 0;
}

Graph generate(const FamilySpec& spec) {
  const int order = family_order(spec);
  const auto& q = spec.params;
  Edges e(order);
  switch (spec.kind) {
    case FamilyKind::kPath:
      for (int v = 0; v + 1 < order; ++v) e.add(v, v + 1);
      break;
    case FamilyKind::kCycle:
      for (int v = 0; v < order; ++v) e.add(v, (v + 1) % order);
      break;
    case FamilyKind::kComplete:
      e.clique(0, order);
      break;
    case FamilyKind::kEmpty:
      break;
    case FamilyKind::kCompleteBipartite:
      for (int a = 0; a < q[0]; ++a) {
        for (int b = 0; b < q[1]; ++b) e.add(a, q[0] + b);
      }
      break;
    case FamilyKind::kStarPendant:
      for (int i = 1; i <= q[0]; ++i) {
        e.add(0, i);
        e.add(i, q[0] + i);
      }
      break;
    case FamilyKind::kCliquePendant:
      e.clique(0, q[0]);
      for (int i = 0; i < q[0]; ++i) e.add(i, q[0] + i);
      break;
    case FamilyKind::kCliqueMatching:
      e.clique(0, q[0]);
      e.clique(q[0], q[0]);
      for (int i = 0; i < q[0]; ++i) e.add(i, q[0] + i);
      break;
    case FamilyKind::kBistar: {
      const int n = q[0];
      const int p = q[1];
      for (int v = 0; v + 1 < p; ++v) e.add(v, v + 1);
      for (int i = 0; i < n; ++i) {
        e.add(0, p + i);
        e.add(p - 1, p + n + i);
      }
      break;
    }
    case FamilyKind::kFan:
      for (int i = 0; i < q[0]; ++i) {
        e.add(0, 2 * i + 1);
        e.add(0, 2 * i + 2);
        e.add(2 * i + 1, 2 * i + 2);
      }
      break;
    case FamilyKind::kDisjointCopies: {
      const Graph one = generate(spec.inner.front());
      Graph all(0);
      for (int c = 0; c < q[0]; ++c) all = disjoint_union(all, one);
      return all;
    }
  }
  return e.build();
}

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse() {
    FamilySpec spec = member();
    if (pos_ != text_.size()) fail("unexpected trailing text");
    validate_or_fail(spec);
    return spec;
  }

 private:
  FamilySpec member() {
    // cxSPEC
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int count = number();
      expect('x');
      FamilySpec inner = member();
      return FamilySpec::copies(count, std::move(inner));
    }
    if (consume("BS")) {
      const int n = number();
      int p = 2;
      if (consume("^")) p = number();
      return FamilySpec::bistar(n, p);
    }
    if (consume("CK")) return FamilySpec::clique_matching(number());
    if (consume("K")) {
      const int a = number();
      if (consume(",")) {
        const int b = number();
        if (consume("*")) {
          if (a != 1) fail("pendant stars are written K1,n*");
          return FamilySpec::star_pendant(b);
        }
        return FamilySpec::complete_bipartite(a, b);
      }
      if (consume("*")) return FamilySpec::clique_pendant(a);
      return FamilySpec::complete(a);
    }
    if (consume("P")) return FamilySpec::path(number());
    if (consume("C")) return FamilySpec::cycle(number());
    if (consume("E")) return FamilySpec::empty(number());
    if (consume("F")) return FamilySpec::fan(number());
    fail("unknown family symbol");
    return {};
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }
  int number() {
    int value = 0;
    const char* first = text_.data() + pos_;
    const auto [end, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc() || end == first) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - first);
    return value;
  }
  void validate_or_fail(const FamilySpec& spec) {
    try {
      validate(spec);
      family_order(spec);
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("bad family spec \"" + std::string(text_) + "\": " + why +
                         "; accepted grammar: " + std::string(kFamilyGrammar),
                     pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  return SpecParser(text).parse();
}

std::string to_string(const FamilySpec& spec) {
  const auto n = [&](std::size_t k) { return std::to_string(spec.params.at(k)); };
  switch (spec.kind) {
    case FamilyKind::kPath: return "P" + n(0);
    case FamilyKind::kCycle: return "C" + n(0);
    case FamilyKind::kComplete: return "K" + n(0);
    case FamilyKind::kEmpty: return "E" + n(0);
    case FamilyKind::kCompleteBipartite: return "K" + n(0) + "," + n(1);
    case FamilyKind::kStarPendant: return "K1," + n(0) + "*";
    case FamilyKind::kCliquePendant: return "K" + n(0) + "*";
    case FamilyKind::kCliqueMatching: return "CK" + n(0);
    case FamilyKind::kBistar: return "BS" + n(0) + "^" + n(1);
    case FamilyKind::kFan: return "F" + n(0);
    case FamilyKind::kDisjointCopies:
      return n(0) + "x" + to_string(spec.inner.at(0));
  }
  return "?";
}

std::optional<OracleValue> oracle_value(const FamilySpec& spec, Param param) {
  try {
    validate(spec);
  } catch (const Error&) {
    return std::nullopt;
  }
  const auto quoted = [](int v, std::string claim) {
    return OracleValue{v, OracleSource::kQuoted, std::move(claim)};
  };
  const auto derived = [](int v, std::string claim) {
    return OracleValue{v, OracleSource::kDerived, std::move(claim)};
  };
  const auto& q = spec.params;
  const int n = q[0];

  switch (spec.kind) {
    case FamilyKind::kStarPendant:
      if (param == Param::kI) return quoted(n, "i(K1,n*) = n");
      if (param == Param::kOIR) return quoted(n, "OIR(K1,n*) = n");
      if (param == Param::kAlpha) return derived(n + 1, "alpha(K1,n*) = n+1");
      break;
    case FamilyKind::kCliquePendant:
      if (param == Param::kI) return quoted(n, "i(Kn*) = n");
      if (param == Param::kOIR) return quoted(n, "OIR(Kn*) = n");
      if (param == Param::kAlpha) return derived(n, "alpha(Kn*) = n");
      break;
    case FamilyKind::kCompleteBipartite:
      if (param == Param::kI && q[0] == q[1]) return quoted(n, "i(Kn,n) = n");
      if (param == Param::kAlpha) {
        return derived(std::max(q[0], q[1]), "alpha(Ks,t) = max(s,t)");
      }
      break;
    case FamilyKind::kBistar:
      if (param == Param::kI && q[1] == 2) return quoted(n + 1, "i(BSn) = n+1");
      if (param == Param::kIS) return quoted(n + 1, "IS(BSn^p) = n+1");
      break;
    case FamilyKind::kCliqueMatching:
      if (param == Param::kUpperGamma) return quoted(n, "Gamma(CKn) = n");
      if (param == Param::kOIR) return quoted(n, "OIR(CKn) = n");
      if (param == Param::kIRS) return quoted(n, "IRS(CKn) = n");
      break;
    case FamilyKind::kFan:
      if (param == Param::kOIR) return quoted(n, "OIR(Fn) = n");
      break;
    case FamilyKind::kPath:
      if (param == Param::kOIR) return quoted(ceil_div(n, 3), "OIR(Pn) = ceil(n/3)");
      if (param == Param::kI) {
        if (n % 3 == 1) return quoted((n + 2) / 3, "i(P(3c-2)) = c");
        return derived(ceil_div(n, 3), "i(Pn) = ceil(n/3)");
      }
      if (param == Param::kGamma) return derived(ceil_div(n, 3), "gamma(Pn) = ceil(n/3)");
      if (param == Param::kAlpha) return derived(ceil_div(n, 2), "alpha(Pn) = ceil(n/2)");
      break;
    case FamilyKind::kCycle:
      if (param == Param::kGamma) return derived(ceil_div(n, 3), "gamma(Cn) = ceil(n/3)");
      if (param == Param::kI) return derived(ceil_div(n, 3), "i(Cn) = ceil(n/3)");
      if (param == Param::kAlpha) return derived(n / 2, "alpha(Cn) = floor(n/2)");
      break;
    case FamilyKind::kComplete:
      switch (param) {
        case Param::kOIR: return derived(n >= 2 ? 1 : 0, "OIR(Kn) = 1 for n >= 2, 0 for K1");
        default: return derived(1, std::string(param_name(param)) + "(Kn) = 1");
      }
    case FamilyKind::kEmpty:
      switch (param) {
        case Param::kOIR: return derived(0, "OIR(En) = 0");
        default: return derived(n, std::string(param_name(param)) + "(En) = n");
      }
    case FamilyKind::kDisjointCopies:
      break;
  }
  return std::nullopt;
}

Graph bistar_variant(int n, int p, std::uint64_t pattern) {
  if (n < 1 || p < 1) throw InvalidArgument("bistar variants need n, p >= 1");
  if (n > kBistarVariantMaxLeaves) {
    throw CapacityError("bistar variants limited to n <= " +
                        std::to_string(kBistarVariantMaxLeaves));
  }
  const Graph base = generate(FamilySpec::bistar(n, p));
  std::array<Mask, kWordBits> rows{};
  for (int v = 0; v < base.order(); ++v) rows[v] = base.neighbors(v);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if ((pattern >> (i * n + j)) & 1U) {
        const int a = p + i;
        const int b = p + n + j;
        rows[a] |= bit(b);
        rows[b] |= bit(a);
      }
    }
  }
  return Graph::from_adjacency(std::span<const Mask>(rows.data(), base.order()));
}

std::uint64_t enumerate_bistar_variants(
    int n, int p, const std::function<void(const Graph&, std::uint64_t)>& visit) {
  if (n < 1 || p < 1) throw InvalidArgument("bistar variants need n, p >= 1");
  if (n > kBistarVariantMaxLeaves) {
    throw CapacityError("enumerating 2^" + std::to_string(n * n) +
                        " bistar variants exceeds the cap n <= " +
                        std::to_string(kBistarVariantMaxLeaves));
  }
  const std::uint64_t count = std::uint64_t{1} << (n * n);
  for (std::uint64_t pattern = 0; pattern < count; ++pattern) {
    visit(bistar_variant(n, p, pattern), pattern);
  }
  return count;
}

}  // namespace domchain
