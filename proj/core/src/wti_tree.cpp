#include "tigen/wti_tree.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace tigen {

namespace {

// Generation-stamped membership set over transmission values. Bumping the
// stamp empties the set without touching memory.
class StampSet {
 public:
  void clear() noexcept {
    if (++stamp_ == 0) {
      seen_.fill(0);
      stamp_ = 1;
    }
  }
  // Returns false if the value was already present.
  bool insert(int value) noexcept {
    if (seen_[value] == stamp_) return false;
    seen_[value] = stamp_;
    return true;
  }

 private:
  std::array<std::uint32_t, kMaxTransmission + 1> seen_{};
  std::uint32_t stamp_ = 0;
};

StampSet& scratch_set() {
  thread_local StampSet set;
  return set;
}

}  // namespace

class TreeJoiner {
 public:
  enum class Check { kPerLevel, kWholeTree };

  template <Check mode>
  static JoinOutcome join(std::span<const WtiTree* const> children) {
    assert(!children.empty());
    int order = 1;
    int depth = 0;
    int root = 0;
    for (std::size_t i = 0; i < children.size(); ++i) {
      assert(i == 0 || children[i - 1]->order() < children[i]->order());
      order += children[i]->order();
      depth = std::max(depth, children[i]->depth());
      root += children[i]->root_transmission();
    }
    ++depth;
    assert(order <= kMaxOrder);
    root += order - 1;

    WtiTree out;
    out.order_ = static_cast<std::uint8_t>(order);
    out.depth_ = static_cast<std::uint8_t>(depth);
    out.transmissions_[0] = static_cast<Transmission>(root);
    out.level_begin_[0] = 0;
    out.level_begin_[1] = 1;

    // Per child: transmission shift at its level 0, and the extra shift per
    // further level.
    std::array<int, kMaxOrder> base{};
    std::array<int, kMaxOrder> per_level{};
    for (std::size_t i = 0; i < children.size(); ++i) {
      const int n_i = children[i]->order();
      base[i] = root + order - 2 * n_i - children[i]->root_transmission();
      per_level[i] = order - n_i;
    }

    StampSet& seen = scratch_set();
    if constexpr (mode == Check::kWholeTree) {
      seen.clear();
      seen.insert(root);
    }
    int pos = 1;
    for (int level = 1; level <= depth; ++level) {
      if constexpr (mode == Check::kPerLevel) seen.clear();
      const int child_level = level - 1;
      for (std::size_t i = 0; i < children.size(); ++i) {
        const WtiTree& child = *children[i];
        if (child.depth() < child_level) continue;
        const int shift = base[i] + per_level[i] * child_level;
        for (Transmission t : child.level(child_level)) {
          const int value = t + shift;
          if constexpr (mode == Check::kWholeTree) {
            // Every vertex must be strictly farther from everything than the root.
            if (value <= root) return std::nullopt;
          }
          if (!seen.insert(value)) return std::nullopt;
          out.transmissions_[pos++] = static_cast<Transmission>(value);
        }
      }
      out.level_begin_[level + 1] = static_cast<std::uint8_t>(pos);
    }

    int offset = 1;
    for (const WtiTree* child : children) {
      out.parents_[offset] = 0;
      for (int x = 1; x < child->order(); ++x) {
        out.parents_[offset + x] = static_cast<Label>(child->parents_[x] + offset);
      }
      offset += child->order();
    }
    return out;
  }
};

WtiTree WtiTree::single_vertex() noexcept {
  WtiTree tree;
  tree.order_ = 1;
  tree.depth_ = 0;
  tree.level_begin_[0] = 0;
  tree.level_begin_[1] = 1;
  return tree;
}

bool operator==(const WtiTree& a, const WtiTree& b) noexcept {
  if (a.order_ != b.order_ || a.depth_ != b.depth_) return false;
  const auto n = static_cast<std::size_t>(a.order_);
  return std::equal(a.parents_.begin() + 1, a.parents_.begin() + n, b.parents_.begin() + 1) &&
         std::equal(a.transmissions_.begin(), a.transmissions_.begin() + n,
                    b.transmissions_.begin()) &&
         std::equal(a.level_begin_.begin(), a.level_begin_.begin() + a.depth_ + 2,
                    b.level_begin_.begin());
}

int root_transmission_of_join(std::span<const int> child_root_transmissions,
                              int joined_order) noexcept {
  return std::accumulate(child_root_transmissions.begin(), child_root_transmissions.end(), 0) +
         joined_order - 1;
}

int child_transmission_step(int root_transmission, int joined_order,
                            int child_subtree_order) noexcept {
  return root_transmission + (joined_order - 2 * child_subtree_order);
}

std::vector<int> lift_level(std::span<const int> child_level_values, int delta_root,
                            int joined_order, int child_order, int level_in_child) {
  const int shift = delta_root + (joined_order - child_order) * level_in_child;
  std::vector<int> lifted(child_level_values.begin(), child_level_values.end());
  for (int& t : lifted) t += shift;
  return lifted;
}

JoinOutcome join_wti_trees(std::span<const WtiTree* const> children) {
  return TreeJoiner::join<TreeJoiner::Check::kPerLevel>(children);
}

JoinOutcome join_wti_trees(std::span<const WtiTree> children) {
  std::vector<const WtiTree*> ptrs;
  ptrs.reserve(children.size());
  for (const WtiTree& t : children) ptrs.push_back(&t);
  return join_wti_trees(std::span<const WtiTree* const>(ptrs));
}

JoinOutcome join_ti_tree(std::span<const WtiTree* const> children) {
  return TreeJoiner::join<TreeJoiner::Check::kWholeTree>(children);
}

bool satisfies_invariants(const WtiTree& tree) {
  const int n = tree.order();
  if (n < 1 || n > kMaxOrder) return false;
  const auto parents = tree.parents();

  std::vector<int> level(n, 0);
  std::vector<int> subtree(n, 1);
  for (int x = 1; x < n; ++x) {
    if (parents[x] >= x) return false;
    level[x] = level[parents[x]] + 1;
  }
  for (int x = n - 1; x >= 1; --x) subtree[parents[x]] += subtree[x];

  // Children in label order must have strictly increasing subtree orders.
  std::vector<int> last_child_order(n, 0);
  for (int x = 1; x < n; ++x) {
    if (subtree[x] <= last_child_order[parents[x]]) return false;
    last_child_order[parents[x]] = subtree[x];
  }

  const int depth = *std::max_element(level.begin(), level.end());
  if (depth != tree.depth()) return false;
  if (tree.level(0).size() != 1) return false;

  std::size_t total = 0;
  const int bound = n * (n - 1) / 2;
  for (int i = 0; i <= depth; ++i) {
    const auto values = tree.level(i);
    const auto expected = std::count(level.begin(), level.end(), i);
    if (static_cast<std::ptrdiff_t>(values.size()) != expected) return false;
    total += values.size();
    std::vector<Transmission> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    if (!sorted.empty() && sorted.back() > bound) return false;
  }
  return total == static_cast<std::size_t>(n);
}

}  // namespace tigen
