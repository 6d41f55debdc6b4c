#include "domchain/graph_io.hpp"

#include <charconv>
#include <cstdlib>
#include <sstream>

namespace domchain {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

}  // namespace

int default_capacity() {
  const char* env = std::getenv("DOMCHAIN_CAPACITY");
  if (env == nullptr || *env == '\0') return kDefaultCapacity;
  int value = 0;
  const std::string_view text(env);
  const auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 1 ||
      value > kGraph6MaxOrder) {
    return kDefaultCapacity;
  }
  return value;
}

Graph parse_graph6(std::string_view text, int capacity) {
  std::size_t base = 0;
  if (text.starts_with(kHeader)) base = kHeader.size();
  const std::string_view body = trim_line_end(text.substr(base));
  if (body.empty()) throw ParseError("empty graph6 string", base);

  for (std::size_t k = 0; k < body.size(); ++k) {
    const auto c = static_cast<unsigned char>(body[k]);
    if (c < kBias || c > 126) {
      throw ParseError("byte outside graph6 range 63..126", base + k);
    }
  }

  std::size_t pos = 0;
  long order = 0;
  if (body[0] != '~') {
    order = body[0] - kBias;
    pos = 1;
  } else {
    // Long header forms exist only for orders we never accept; decode enough
    // to report the order.
    if (body.size() < 4) throw ParseError("truncated order header", base);
    if (body[1] == '~') {
      if (body.size() < 8) throw ParseError("truncated order header", base);
      for (std::size_t k = 2; k < 8; ++k) order = (order << 6) | (body[k] - kBias);
      pos = 8;
    } else {
      for (std::size_t k = 1; k < 4; ++k) order = (order << 6) | (body[k] - kBias);
      pos = 4;
    }
  }
  if (order > capacity) {
    throw ParseError("order " + std::to_string(order) + " exceeds capacity " +
                         std::to_string(capacity),
                     base);
  }

  const int n = static_cast<int>(order);
  const std::size_t bits = pair_count(n);
  const std::size_t need = (bits + 5) / 6;
  if (body.size() - pos < need) {
    throw ParseError("truncated edge bit field: expected " +
                         std::to_string(need) + " bytes, found " +
                         std::to_string(body.size() - pos),
                     base + body.size());
  }
  if (body.size() - pos > need) {
    throw ParseError("trailing bytes after edge bit field", base + pos + need);
  }

  std::array<Mask, kWordBits> rows{};
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = body[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  if (bits % 6 != 0) {
    const int last = body[pos + need - 1] - kBias;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) {
      throw ParseError("nonzero padding bits", base + pos + need - 1);
    }
  }
  return Graph::from_adjacency(std::span<const Mask>(rows.data(), n));
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw CapacityError("order " + std::to_string(n) +
                        " not encodable in a single-byte graph6 header");
  }
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  }
  return out;
}

namespace {

// Reads whitespace-separated non-negative integers from one line.
std::optional<std::vector<long>> line_integers(std::string_view line) {
  std::vector<long> values;
  std::size_t k = 0;
  while (k < line.size()) {
    while (k < line.size() && (line[k] == ' ' || line[k] == '\t' ||
                               line[k] == '\r' || line[k] == '\n')) {
      ++k;
    }
    if (k == line.size()) break;
    long value = 0;
    const auto [end, ec] =
        std::from_chars(line.data() + k, line.data() + line.size(), value);
    if (ec != std::errc()) return std::nullopt;
    values.push_back(value);
    k = static_cast<std::size_t>(end - line.data());
    if (k < line.size() && line[k] != ' ' && line[k] != '\t' &&
        line[k] != '\r' && line[k] != '\n') {
      return std::nullopt;
    }
  }
  return values;
}

class EdgeListParser {
 public:
  EdgeListParser(std::vector<std::string_view> lines, int capacity)
      : lines_(std::move(lines)), capacity_(capacity) {}

  bool at_end() {
    skip_blank();
    return next_ >= lines_.size();
  }
  std::size_t line_number() const { return next_ + 1; }
  // Line of the most recently examined header or edge.
  std::size_t current_line() const { return current_ + 1; }

  Graph next() {
    skip_blank();
    const auto header = integers("edge-list header");
    if (header.size() != 2) {
      throw ParseError("edge-list header must be \"n m\"", 0);
    }
    const long n = header[0];
    const long m = header[1];
    if (n < 0) throw ParseError("negative order", 0);
    if (n > capacity_) {
      throw ParseError("order " + std::to_string(n) + " exceeds capacity " +
                           std::to_string(capacity_),
                       0);
    }
    if (m < 0 || m > static_cast<long>(pair_count(static_cast<int>(n)))) {
      throw ParseError("edge count " + std::to_string(m) +
                           " impossible for order " + std::to_string(n),
                       0);
    }
    std::vector<std::pair<int, int>> edges;
    for (long e = 0; e < m; ++e) {
      skip_blank();
      const auto uv = integers("edge line");
      if (uv.size() != 2) throw ParseError("edge line must be \"u v\"", 0);
      if (uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n) {
        throw ParseError("endpoint out of range", 0);
      }
      if (uv[0] == uv[1]) throw ParseError("loop edge", 0);
      edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
  }

 private:
  void skip_blank() {
    while (next_ < lines_.size() && is_blank(lines_[next_])) ++next_;
  }
  std::vector<long> integers(const char* what) {
    if (next_ >= lines_.size()) {
      throw ParseError(std::string("missing ") + what, 0);
    }
    current_ = next_;
    auto values = line_integers(lines_[next_]);
    if (!values) throw ParseError(std::string("malformed ") + what, 0);
    ++next_;
    return *values;
  }

  std::vector<std::string_view> lines_;
  int capacity_;
  std::size_t next_ = 0;
  std::size_t current_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  return lines;
}

}  // namespace

Graph parse_edge_list(std::string_view text, int capacity) {
  EdgeListParser parser(split_lines(text), capacity);
  Graph g = parser.next();
  if (!parser.at_end()) {
    throw ParseError("unexpected content after edge list on line " +
                         std::to_string(parser.line_number()),
                     0);
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

std::vector<ReadItem> read_graphs(std::istream& in, InputFormat format,
                                  int capacity) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto lines = split_lines(text);

  if (format == InputFormat::kAuto) {
    format = InputFormat::kGraph6;
    for (const auto& line : lines) {
      if (is_blank(line)) continue;
      const auto values = line_integers(line);
      if (values && values->size() == 2) format = InputFormat::kEdgeList;
      break;
    }
  }

  std::vector<ReadItem> items;
  if (format == InputFormat::kGraph6) {
    for (std::size_t k = 0; k < lines.size(); ++k) {
      if (is_blank(lines[k])) continue;
      ReadItem item;
      item.line = k + 1;
      try {
        item.graph = parse_graph6(lines[k], capacity);
      } catch (const Error& e) {
        item.error = e.what();
      }
      items.push_back(std::move(item));
    }
    return items;
  }

  EdgeListParser parser(lines, capacity);
  while (!parser.at_end()) {
    ReadItem item;
    item.line = parser.line_number();
    try {
      item.graph = parser.next();
      items.push_back(std::move(item));
    } catch (const Error& e) {
      item.line = parser.current_line();
      item.error = e.what();
      items.push_back(std::move(item));
      break;
    }
  }
  return items;
}

}  // namespace domchain
