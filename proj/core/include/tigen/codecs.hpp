#ifndef TIGEN_CODECS_HPP
#define TIGEN_CODECS_HPP

#include <span>
#include <string>
#include <vector>

#include "tigen/wti_tree.hpp"

namespace tigen {

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Format { kGraph6, kSparse6, kParentList };

struct EncodedGraph {
  std::string bytes;
  Format format = Format::kGraph6;
};

/// Largest order representable with the four-byte graph6 size field.
inline constexpr long kMaxEncodableOrder = 258047;

/// Edges (parents[x], x), each with u < v, sorted lexicographically.
std::vector<Edge> to_edge_list(const WtiTree& tree);

/// graph6 encoding without header or trailing newline. Throws
/// std::out_of_range for orders outside [1, kMaxEncodableOrder].
EncodedGraph encode_graph6(std::span<const Edge> edges, long order);

/// sparse6 encoding, including the leading ':', without trailing newline.
EncodedGraph encode_sparse6(std::span<const Edge> edges, long order);

/// Space-separated parents of vertices 1..order-1.
EncodedGraph encode_parent_list(const WtiTree& tree);

}  // namespace tigen

#endif  // TIGEN_CODECS_HPP
