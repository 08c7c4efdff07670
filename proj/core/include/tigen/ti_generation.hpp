#ifndef TIGEN_TI_GENERATION_HPP
#define TIGEN_TI_GENERATION_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "tigen/enumeration.hpp"
#include "tigen/parallel.hpp"
#include "tigen/wti_tree.hpp"

namespace tigen {

struct DegreeInfo {
  int max_degree = 0;
  int root_children = 0;

  friend bool operator==(const DegreeInfo&, const DegreeInfo&) = default;
};

/// Maximum vertex degree of the tree (as an unrooted graph) and the number of
/// children of the root, both read off the parent array.
DegreeInfo get_max_degree(const WtiTree& tree);

/// True iff the tree is the canonical representation of a transmission
/// irregular tree: all transmissions are distinct and the root holds the
/// smallest one.
bool is_ti_tree(const WtiTree& tree);

/// Per-order count of emitted TI trees, orders 1..max_order.
class TiCensus {
 public:
  explicit TiCensus(int max_order) : counts_(static_cast<std::size_t>(max_order) + 1, 0) {}

  int max_order() const noexcept { return static_cast<int>(counts_.size()) - 1; }
  std::uint64_t operator[](int order) const noexcept {
    return counts_[static_cast<std::size_t>(order)];
  }
  void add(int order, std::uint64_t count) noexcept {
    counts_[static_cast<std::size_t>(order)] += count;
  }
  std::uint64_t total() const noexcept;

  friend bool operator==(const TiCensus&, const TiCensus&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

/// Join components for building large trees around a centroid: WTI trees of
/// degree at most m whose root has fewer than m children.
class SubtreePool {
 public:
  explicit SubtreePool(int max_order) : by_order_(static_cast<std::size_t>(max_order) + 1) {}

  int max_order() const noexcept { return static_cast<int>(by_order_.size()) - 1; }
  std::span<const WtiTree> operator[](int order) const noexcept {
    return by_order_[static_cast<std::size_t>(order)];
  }
  void add(const WtiTree& tree) { by_order_[static_cast<std::size_t>(tree.order())].push_back(tree); }

 private:
  std::vector<std::vector<WtiTree>> by_order_;
};

/// Visits the subtree-order sequences used to assemble trees of order k
/// around a centroid root with at most m children: parts sum to k - 1 and
/// every part is below k / 2.
template <class Emit>
void for_each_centroid_split(int k, int m, Emit&& emit) {
  generate_increasing(k - 1, (k - 1) / 2, m, emit);
}

using TiTreeCallback = std::function<void(const WtiTree&)>;

struct TiGenerationOptions {
  unsigned threads = default_thread_count();
  /// Forces a single thread and the fixed report order: small orders first,
  /// then by order, subtree sequence and tuple.
  bool deterministic = false;
};

/// Filters a WTI pool by maximum degree, reports its TI trees to on_ti in
/// pool order, and collects the subtree pool.
SubtreePool filter_wti_pool(const WtiPool& pool, int max_degree, const TiTreeCallback& on_ti);

/// Reports every TI tree of order at most n and maximum degree at most
/// max_degree (unbounded when empty) exactly once, in canonical
/// representation. `func` may be empty when only the census is wanted;
/// otherwise calls to it never overlap.
TiCensus generate_ti_trees(int n, std::optional<int> max_degree, const TiTreeCallback& func,
                           const TiGenerationOptions& options = {});

}  // namespace tigen

#endif  // TIGEN_TI_GENERATION_HPP
