#include "tigen/ti_generation.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "product_tasks.hpp"

namespace tigen {

namespace {

constexpr std::uint64_t kTaskChunk = 1 << 16;
constexpr std::size_t kReportBatch = 4096;

}  // namespace

DegreeInfo get_max_degree(const WtiTree& tree) {
  std::array<int, kMaxOrder> children{};
  const auto parents = tree.parents();
  for (int x = 1; x < tree.order(); ++x) ++children[parents[x]];

  DegreeInfo info;
  info.root_children = children[0];
  info.max_degree = children[0];
  for (int x = 1; x < tree.order(); ++x) info.max_degree = std::max(info.max_degree, children[x] + 1);
  return info;
}

bool is_ti_tree(const WtiTree& tree) {
  std::array<Transmission, kMaxOrder> sorted{};
  const auto values = tree.transmissions();
  std::copy(values.begin(), values.end(), sorted.begin());
  const auto last = sorted.begin() + tree.order();
  std::sort(sorted.begin(), last);
  if (std::adjacent_find(sorted.begin(), last) != last) return false;
  return sorted[0] == tree.root_transmission();
}

std::uint64_t TiCensus::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

SubtreePool filter_wti_pool(const WtiPool& pool, int max_degree, const TiTreeCallback& on_ti) {
  SubtreePool subtrees(pool.max_order());
  for (int k = 1; k <= pool.max_order(); ++k) {
    for (const WtiTree& tree : pool[k]) {
      const DegreeInfo degree = get_max_degree(tree);
      if (degree.max_degree > max_degree) continue;
      if (on_ti && is_ti_tree(tree)) on_ti(tree);
      if (degree.root_children < max_degree) subtrees.add(tree);
    }
  }
  return subtrees;
}

TiCensus generate_ti_trees(int n, std::optional<int> max_degree, const TiTreeCallback& func,
                           const TiGenerationOptions& options) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("tree order out of range");
  const int m = max_degree.value_or(std::max(n - 1, 1));
  if (m < 1) throw std::invalid_argument("maximum degree must be positive");
  const unsigned threads = options.deterministic ? 1u : std::max(1u, options.threads);

  TiCensus census(n);

  // Small orders: every TI tree of order at most n/2 is a pool tree. Order 1
  // is always covered so the trivial tree is reported for n = 1 too.
  const int small = std::max(1, n / 2);
  const WtiPool pool = generate_wti_trees(small, m, threads);
  const SubtreePool subtrees = filter_wti_pool(pool, m, [&](const WtiTree& tree) {
    census.add(tree.order(), 1);
    if (func) func(tree);
  });

  // Larger orders: the minimum-transmission vertex is a centroid, so every
  // root subtree has order below k / 2 and is drawn from the subtree pool.
  std::vector<detail::ProductTask> tasks;
  for (int k = small + 1; k <= n; ++k) {
    for_each_centroid_split(k, m, [&](std::span<const int> orders) {
      detail::append_product_tasks(subtrees, orders, kTaskChunk, tasks);
    });
  }

  std::mutex report_mutex;
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    const detail::ProductTask& task = tasks[i];
    const int k = 1 + std::accumulate(task.orders.begin(), task.orders.end(), 0);
    std::uint64_t found = 0;
    std::vector<WtiTree> batch;

    auto flush = [&] {
      std::lock_guard lock(report_mutex);
      for (const WtiTree& tree : batch) func(tree);
      batch.clear();
    };

    detail::run_product_task(subtrees, task, [&](std::span<const WtiTree* const> tuple) {
      auto joined = join_ti_tree(tuple);
      if (!joined) return;
      ++found;
      if (func) {
        batch.push_back(*joined);
        if (batch.size() >= kReportBatch) flush();
      }
    });
    if (!batch.empty()) flush();

    std::lock_guard lock(report_mutex);
    census.add(k, found);
  });

  return census;
}

}  // namespace tigen
