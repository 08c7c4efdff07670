#include "tigen/enumeration.hpp"

#include <stdexcept>

#include "product_tasks.hpp"
#include "tigen/parallel.hpp"

namespace tigen {

namespace {
constexpr std::uint64_t kTaskChunk = 1 << 14;
}

WtiPool generate_wti_trees(int n, int h, unsigned threads) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("tree order out of range");
  if (h < 1) throw std::invalid_argument("children bound must be positive");

  WtiPool pool(n);
  pool.collection(1).push_back(WtiTree::single_vertex());

  for (int k = 2; k <= n; ++k) {
    std::vector<detail::ProductTask> tasks;
    generate_increasing(k - 1, k - 1, h, [&](std::span<const int> orders) {
      detail::append_product_tasks(pool, orders, kTaskChunk, tasks);
    });

    struct TaskResult {
      std::vector<WtiTree> trees;
      std::uint64_t attempted = 0;
    };
    std::vector<TaskResult> results(tasks.size());
    parallel_for(tasks.size(), threads, [&](std::size_t i) {
      TaskResult& out = results[i];
      detail::run_product_task(pool, tasks[i], [&](std::span<const WtiTree* const> tuple) {
        ++out.attempted;
        if (auto joined = join_wti_trees(tuple)) out.trees.push_back(*joined);
      });
    });

    auto& collection = pool.collection(k);
    for (TaskResult& r : results) {
      pool.attempted_joins += r.attempted;
      pool.failed_joins += r.attempted - r.trees.size();
      collection.insert(collection.end(), r.trees.begin(), r.trees.end());
    }
  }
  return pool;
}

}  // namespace tigen
