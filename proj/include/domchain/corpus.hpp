#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "domchain/graph.hpp"

namespace domchain {

// Number of vertex pairs of a graph of the given order.
constexpr int pair_count(int order) { return order * (order - 1) / 2; }

// Labelled graph whose k-th pair (in graph6 order (0,1), (0,2), (1,2),
// (0,3), ...) is an edge iff bit k of `code` is set.
Graph graph_from_code(int order, std::uint64_t code);

// Random-access sequence of graphs. Indices are stable, so a scan split
// across workers is reproducible.
class Corpus {
 public:
  virtual ~Corpus() = default;
  virtual std::uint64_t size() const = 0;
  virtual Graph at(std::uint64_t index) const = 0;
  virtual std::string describe() const = 0;
};

class GraphListCorpus final : public Corpus {
 public:
  explicit GraphListCorpus(std::vector<Graph> graphs, std::string name = "list")
      : graphs_(std::move(graphs)), name_(std::move(name)) {}

  std::uint64_t size() const override { return graphs_.size(); }
  Graph at(std::uint64_t index) const override { return graphs_.at(index); }
  std::string describe() const override { return name_; }

 private:
  std::vector<Graph> graphs_;
  std::string name_;
};

// Every labelled graph of each order in [min_order, max_order], orders
// ascending and codes ascending within an order. Orders above 7 are refused.
class LabeledCorpus final : public Corpus {
 public:
  static constexpr int kMaxOrder = 7;

  LabeledCorpus(int min_order, int max_order);

  std::uint64_t size() const override { return total_; }
  Graph at(std::uint64_t index) const override;
  std::string describe() const override;

  int min_order() const { return min_order_; }
  int max_order() const { return max_order_; }

 private:
  int min_order_;
  int max_order_;
  std::vector<std::uint64_t> starts_;  // first index of each order
  std::uint64_t total_ = 0;
};

// Worker count: `requested` if positive, otherwise the hardware concurrency.
int resolve_jobs(int requested);

// Splits [0, count) into contiguous chunks, folds each chunk into its own
// accumulator on a pool of `jobs` threads, then merges the accumulators in
// chunk order. `work(acc, begin, end)` fills one accumulator;
// `acc.merge(later)` absorbs the next chunk's result. With an order-respecting
// merge the outcome does not depend on `jobs`. An exception thrown by `work`
// is rethrown after the pool drains (the one from the earliest chunk wins).
template <class Acc, class Work>
Acc parallel_fold(std::uint64_t count, int jobs, Work&& work) {
  jobs = resolve_jobs(jobs);
  const std::uint64_t chunks =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(count, 64ULL * jobs));
  std::vector<Acc> parts(chunks);
  std::atomic<std::uint64_t> next{0};
  std::mutex failure_lock;
  std::exception_ptr failure;
  std::uint64_t failure_chunk = chunks;
  const auto run = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t begin = count * c / chunks;
      const std::uint64_t end = count * (c + 1) / chunks;
      try {
        work(parts[c], begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> hold(failure_lock);
        if (c < failure_chunk) {
          failure_chunk = c;
          failure = std::current_exception();
        }
      }
    }
  };
  if (jobs == 1 || chunks == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    const int threads = static_cast<int>(std::min<std::uint64_t>(jobs, chunks));
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  Acc total = std::move(parts.front());
  for (std::uint64_t c = 1; c < chunks; ++c) total.merge(parts[c]);
  return total;
}

}  // namespace domchain
