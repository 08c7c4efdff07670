#ifndef TIGEN_SRC_PRODUCT_TASKS_HPP
#define TIGEN_SRC_PRODUCT_TASKS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "tigen/enumeration.hpp"

namespace tigen::detail {

/// A contiguous slice of the cartesian product selected by one sequence of
/// subtree orders.
struct ProductTask {
  std::vector<int> orders;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
};

/// Splits the product for `orders` into slices of at most `chunk` tuples,
/// appending them in mixed-radix order.
template <class Pool>
void append_product_tasks(const Pool& pool, std::span<const int> orders, std::uint64_t chunk,
                          std::vector<ProductTask>& tasks) {
  std::vector<std::size_t> sizes;
  sizes.reserve(orders.size());
  for (int k : orders) sizes.push_back(pool[k].size());
  const std::uint64_t total = cartesian_product_size(sizes);
  for (std::uint64_t begin = 0; begin < total; begin += chunk) {
    tasks.push_back({std::vector<int>(orders.begin(), orders.end()), begin,
                     std::min(total, begin + chunk)});
  }
}

/// Runs the slice, passing each tuple of tree pointers to `visit`.
template <class Pool, class Visit>
void run_product_task(const Pool& pool, const ProductTask& task, Visit&& visit) {
  std::vector<std::span<const WtiTree>> collections;
  collections.reserve(task.orders.size());
  for (int k : task.orders) collections.push_back(pool[k]);
  cartesian_product_range(std::span<const std::span<const WtiTree>>(collections), task.begin,
                          task.end, visit);
}

}  // namespace tigen::detail

#endif  // TIGEN_SRC_PRODUCT_TASKS_HPP
