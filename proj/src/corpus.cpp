#include "domchain/corpus.hpp"

namespace domchain {

Graph graph_from_code(int order, std::uint64_t code) {
  std::array<Mask, kWordBits> rows{};
  int k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((code >> k) & 1U) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
    }
  }
  return Graph::from_adjacency(std::span<const Mask>(rows.data(), order));
}

LabeledCorpus::LabeledCorpus(int min_order, int max_order)
    : min_order_(min_order), max_order_(max_order) {
  if (min_order < 0 || max_order < min_order || max_order > kMaxOrder) {
    throw CapacityError("labelled corpus orders must satisfy 0 <= min <= max <= " +
                        std::to_string(kMaxOrder));
  }
  for (int n = min_order; n <= max_order; ++n) {
    starts_.push_back(total_);
    total_ += std::uint64_t{1} << pair_count(n);
  }
}

Graph LabeledCorpus::at(std::uint64_t index) const {
  if (index >= total_) throw PreconditionError("corpus index out of range");
  int slot = static_cast<int>(starts_.size()) - 1;
  while (starts_[slot] > index) --slot;
  return graph_from_code(min_order_ + slot, index - starts_[slot]);
}

std::string LabeledCorpus::describe() const {
  return "labelled graphs of order " + std::to_string(min_order_) + ".." +
         std::to_string(max_order_);
}

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace domchain
