#ifndef TIGEN_ENUMERATION_HPP
#define TIGEN_ENUMERATION_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "tigen/wti_tree.hpp"

namespace tigen {

namespace detail {

template <class Emit>
void increasing_from(std::vector<int>& buffer, int remaining, int low, int beta, int gamma,
                     Emit& emit) {
  const bool can_extend = static_cast<int>(buffer.size()) + 1 < gamma;
  for (int v = low; v <= beta && v <= remaining; ++v) {
    const int rest = remaining - v;
    if (rest == 0) {
      buffer.push_back(v);
      emit(std::span<const int>(buffer));
      buffer.pop_back();
    } else if (can_extend && rest > v) {
      // The next part must exceed v.
      buffer.push_back(v);
      increasing_from(buffer, rest, v + 1, beta, gamma, emit);
      buffer.pop_back();
    }
  }
}

}  // namespace detail

/// Emits, in lexicographic order, every strictly increasing sequence of
/// positive integers with sum alpha, last element at most beta and at most
/// gamma elements. The emitted span is only valid during the call.
template <class Emit>
void generate_increasing(int alpha, int beta, int gamma, Emit&& emit) {
  if (alpha < 1 || beta < 1 || gamma < 1) return;
  std::vector<int> buffer;
  buffer.reserve(static_cast<std::size_t>(gamma));
  detail::increasing_from(buffer, alpha, 1, beta, gamma, emit);
}

/// Number of tuples in the product of collections with the given sizes.
/// Throws std::overflow_error if it does not fit in 64 bits.
inline std::uint64_t cartesian_product_size(std::span<const std::size_t> sizes) {
  std::uint64_t total = 1;
  for (std::size_t s : sizes) {
    if (s == 0) return 0;
    if (total > UINT64_MAX / s) throw std::overflow_error("cartesian product too large");
    total *= s;
  }
  return total;
}

/// Emits the tuples with mixed-radix index in [begin, end) of the product of
/// `collections`; the last coordinate varies fastest. Each tuple is a span
/// of pointers into the collections, valid only during the call.
template <class T, class Emit>
void cartesian_product_range(std::span<const std::span<const T>> collections,
                             std::uint64_t begin, std::uint64_t end, Emit&& emit) {
  const std::size_t q = collections.size();
  std::vector<std::size_t> sizes(q);
  for (std::size_t i = 0; i < q; ++i) sizes[i] = collections[i].size();
  end = std::min(end, cartesian_product_size(sizes));
  if (begin >= end) return;

  std::vector<std::size_t> digit(q);
  std::vector<const T*> tuple(q);
  std::uint64_t rest = begin;
  for (std::size_t i = q; i-- > 0;) {
    digit[i] = static_cast<std::size_t>(rest % sizes[i]);
    rest /= sizes[i];
    tuple[i] = &collections[i][digit[i]];
  }

  for (std::uint64_t index = begin;;) {
    emit(std::span<const T* const>(tuple));
    if (++index == end) return;
    std::size_t i = q;
    while (i-- > 0) {
      if (++digit[i] < sizes[i]) {
        tuple[i] = &collections[i][digit[i]];
        break;
      }
      digit[i] = 0;
      tuple[i] = &collections[i][0];
    }
  }
}

/// Emits every tuple of the product of `collections`, last coordinate
/// fastest. Nothing is emitted when a collection is empty.
template <class T, class Emit>
void cartesian_product(std::span<const std::span<const T>> collections, Emit&& emit) {
  cartesian_product_range(collections, 0, UINT64_MAX, emit);
}

/// WTI trees grouped by order; collection k holds trees of order k.
class WtiPool {
 public:
  explicit WtiPool(int max_order) : by_order_(static_cast<std::size_t>(max_order) + 1) {}

  int max_order() const noexcept { return static_cast<int>(by_order_.size()) - 1; }

  std::span<const WtiTree> operator[](int order) const noexcept {
    return by_order_[static_cast<std::size_t>(order)];
  }

  std::vector<WtiTree>& collection(int order) { return by_order_[static_cast<std::size_t>(order)]; }

  std::size_t total_size() const noexcept {
    std::size_t total = 0;
    for (const auto& c : by_order_) total += c.size();
    return total;
  }

  /// Joins attempted and joins rejected for a repeated level transmission.
  std::uint64_t attempted_joins = 0;
  std::uint64_t failed_joins = 0;

 private:
  std::vector<std::vector<WtiTree>> by_order_;
};

/// Builds all WTI trees of order at most n in which no vertex has more than
/// h children. Collections are built order by order; within an order the
/// tuples may be processed on `threads` workers, and the result order does
/// not depend on the thread count.
WtiPool generate_wti_trees(int n, int h, unsigned threads = 1);

}  // namespace tigen

#endif  // TIGEN_ENUMERATION_HPP
