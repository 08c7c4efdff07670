#ifndef TIGEN_WTI_TREE_HPP
#define TIGEN_WTI_TREE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tigen {

/// Largest tree order the generator handles. Transmissions of a tree of
/// this order stay below 42 * 41 / 2 = 861, so 16-bit storage is exact.
inline constexpr int kMaxOrder = 42;

using Label = std::uint8_t;
using Transmission = std::uint16_t;

inline constexpr int kMaxTransmission = kMaxOrder * (kMaxOrder - 1) / 2;

/// Ordered rooted tree in which vertices on the same level have pairwise
/// distinct transmissions (a "WTI" tree).
///
/// Vertices are labelled 0..order-1 with the root at 0. Every parent label
/// precedes its children, and the children of each vertex, in label order,
/// have strictly increasing subtree orders. Transmissions are stored
/// level-major; within a level they appear in increasing label order.
///
/// Instances are immutable once built, so they can be shared freely between
/// threads.
class WtiTree {
 public:
  /// The unique tree of order 1.
  static WtiTree single_vertex() noexcept;

  int order() const noexcept { return order_; }
  int depth() const noexcept { return depth_; }
  int level_count() const noexcept { return depth_ + 1; }

  /// Entry x (x >= 1) is the parent of x; entry 0 is an unused sentinel.
  std::span<const Label> parents() const noexcept {
    return {parents_.data(), static_cast<std::size_t>(order_)};
  }

  /// Transmissions of the vertices on level i, in increasing label order.
  std::span<const Transmission> level(int i) const noexcept {
    return {transmissions_.data() + level_begin_[i],
            static_cast<std::size_t>(level_begin_[i + 1] - level_begin_[i])};
  }

  /// All transmissions, level by level.
  std::span<const Transmission> transmissions() const noexcept {
    return {transmissions_.data(), static_cast<std::size_t>(order_)};
  }

  Transmission root_transmission() const noexcept { return transmissions_[0]; }

  friend bool operator==(const WtiTree& a, const WtiTree& b) noexcept;

 private:
  friend class TreeJoiner;

  WtiTree() = default;

  std::uint8_t order_ = 0;
  std::uint8_t depth_ = 0;
  std::array<std::uint8_t, kMaxOrder + 1> level_begin_{};
  std::array<Label, kMaxOrder> parents_{};
  std::array<Transmission, kMaxOrder> transmissions_{};
};

/// Result of a join; empty when some level ended up with a repeated
/// transmission.
using JoinOutcome = std::optional<WtiTree>;

/// Transmission of the new root when the given child roots are attached to it.
int root_transmission_of_join(std::span<const int> child_root_transmissions,
                              int joined_order) noexcept;

/// Transmission of a root child, one edge away from a root whose transmission
/// is known. Moving across an edge changes the distance sum by the number of
/// vertices left behind minus the number approached.
int child_transmission_step(int root_transmission, int joined_order,
                            int child_subtree_order) noexcept;

/// Shifts the transmissions of one level of a child tree into the joined
/// tree. delta_root is the change of the child root's transmission caused
/// by the join.
std::vector<int> lift_level(std::span<const int> child_level_values, int delta_root,
                            int joined_order, int child_order,
                            int level_in_child);

/// Attaches the roots of the children, whose orders must be strictly
/// increasing, to a new root vertex. Fails when any level of the result
/// holds a repeated transmission.
JoinOutcome join_wti_trees(std::span<const WtiTree* const> children);
JoinOutcome join_wti_trees(std::span<const WtiTree> children);

/// Same join, but succeeds only when the result is transmission irregular
/// with the root as the unique minimum. Equivalent to join_wti_trees
/// followed by is_ti_tree, with earlier rejection.
JoinOutcome join_ti_tree(std::span<const WtiTree* const> children);

/// Cheap structural check of every stored invariant. Used by tests and debug
/// builds; the joiner never produces a tree that fails it.
bool satisfies_invariants(const WtiTree& tree);

}  // namespace tigen

#endif  // TIGEN_WTI_TREE_HPP
