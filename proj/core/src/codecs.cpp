#include "tigen/codecs.hpp"

#include <algorithm>
#include <stdexcept>

namespace tigen {

namespace {

constexpr int kBias = 63;

void check_order(long order) {
  if (order < 1 || order > kMaxEncodableOrder) {
    throw std::out_of_range("graph order outside encodable range");
  }
}

void append_size(std::string& out, long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
    }
  }
}

// Packs bits big-endian into six-bit printable groups.
class SixBitWriter {
 public:
  explicit SixBitWriter(std::string& out) : out_(out) {}

  void put(bool bit) {
    group_ = (group_ << 1) | (bit ? 1 : 0);
    if (++filled_ == 6) emit();
  }
  void put(unsigned long value, int width) {
    for (int b = width - 1; b >= 0; --b) put(((value >> b) & 1UL) != 0);
  }
  int pending() const noexcept { return filled_; }
  void pad(bool bit) {
    while (filled_ != 0) put(bit);
  }

 private:
  void emit() {
    out_.push_back(static_cast<char>(group_ + kBias));
    group_ = 0;
    filled_ = 0;
  }

  std::string& out_;
  int group_ = 0;
  int filled_ = 0;
};

}  // namespace

std::vector<Edge> to_edge_list(const WtiTree& tree) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(tree.order()) - 1);
  const auto parents = tree.parents();
  for (int x = 1; x < tree.order(); ++x) edges.push_back({parents[x], x});
  std::sort(edges.begin(), edges.end());
  return edges;
}

EncodedGraph encode_graph6(std::span<const Edge> edges, long order) {
  check_order(order);
  const auto n = static_cast<std::size_t>(order);
  // Upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
  std::vector<bool> bits(n * (n - 1) / 2, false);
  for (const Edge& e : edges) {
    const auto i = static_cast<std::size_t>(std::min(e.u, e.v));
    const auto j = static_cast<std::size_t>(std::max(e.u, e.v));
    if (i == j || j >= n) throw std::invalid_argument("edge outside graph");
    bits[j * (j - 1) / 2 + i] = true;
  }

  EncodedGraph encoded{{}, Format::kGraph6};
  append_size(encoded.bytes, order);
  SixBitWriter writer(encoded.bytes);
  for (bool bit : bits) writer.put(bit);
  writer.pad(false);
  return encoded;
}

EncodedGraph encode_sparse6(std::span<const Edge> edges, long order) {
  check_order(order);
  // Edges ordered by larger endpoint, then smaller.
  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) {
    const int i = std::min(e.u, e.v);
    const int j = std::max(e.u, e.v);
    if (j >= order) throw std::invalid_argument("edge outside graph");
    sorted.push_back({j, i});
  }
  std::sort(sorted.begin(), sorted.end());

  int width = 0;
  for (long r = order - 1; r != 0; r >>= 1) ++width;

  EncodedGraph encoded{":", Format::kSparse6};
  append_size(encoded.bytes, order);
  SixBitWriter writer(encoded.bytes);
  long current = 0;
  for (const Edge& e : sorted) {
    const long j = e.u;
    const long i = e.v;
    if (j == current) {
      writer.put(false);
    } else {
      writer.put(true);
      if (j > current + 1) {
        writer.put(static_cast<unsigned long>(j), width);
        writer.put(false);
      }
      current = j;
    }
    writer.put(static_cast<unsigned long>(i), width);
  }

  if (writer.pending() != 0) {
    const int room = 6 - writer.pending();
    // When n is a power of two and the current vertex is n-2, padding with
    // ones alone would decode as a spurious edge; lead with a zero.
    if (room >= width + 1 && current == order - 2 && order == (1L << width)) {
      writer.put(false);
    }
    writer.pad(true);
  }
  return encoded;
}

EncodedGraph encode_parent_list(const WtiTree& tree) {
  EncodedGraph encoded{{}, Format::kParentList};
  const auto parents = tree.parents();
  for (int x = 1; x < tree.order(); ++x) {
    if (x > 1) encoded.bytes.push_back(' ');
    encoded.bytes += std::to_string(parents[x]);
  }
  return encoded;
}

}  // namespace tigen
