#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domchain/graph.hpp"

namespace domchain {

// Largest order graph6 can carry in its single-byte header.
inline constexpr int kGraph6MaxOrder = 62;
inline constexpr int kDefaultCapacity = 32;

// Capacity for parsed input: 32 unless DOMCHAIN_CAPACITY names another value
// in 1..62.
int default_capacity();

// Decodes one graph6 line. A leading ">>graph6<<" marker and trailing line
// terminators are ignored.
Graph parse_graph6(std::string_view text, int capacity = default_capacity());
std::string emit_graph6(const Graph& g);

// "n m" followed by m lines "u v" (0-based); blank lines are skipped.
Graph parse_edge_list(std::string_view text,
                      int capacity = default_capacity());
std::string emit_edge_list(const Graph& g);

enum class InputFormat { kAuto, kGraph6, kEdgeList };

// One graph (or one failure) from a stream; `line` is 1-based.
struct ReadItem {
  std::size_t line = 0;
  std::optional<Graph> graph;
  std::string error;
};

// graph6 input yields one item per non-blank line, so a bad line does not
// stop the rest. Edge-list input stops at the first malformed block. kAuto
// picks edge-list when the first non-blank line is two integers.
std::vector<ReadItem> read_graphs(std::istream& in, InputFormat format,
                                  int capacity = default_capacity());

}  // namespace domchain
