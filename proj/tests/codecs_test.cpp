#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "support/test_support.hpp"
#include "tigen/codecs.hpp"
#include "tigen/enumeration.hpp"

namespace tigen {
namespace {

using testing::decode_graph6;
using testing::decode_sparse6;
using testing::edge_set;

std::vector<Edge> path_edges(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return edges;
}

TEST(ToEdgeList, Examples) {
  EXPECT_TRUE(to_edge_list(WtiTree::single_vertex()).empty());
  EXPECT_EQ(to_edge_list(testing::rooted_path(2)), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(to_edge_list(testing::rooted_path(3)), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(EncodeGraph6, SmallLiterals) {
  EXPECT_EQ(encode_graph6({}, 1).bytes, "@");
  EXPECT_EQ(encode_graph6(path_edges(2), 2).bytes, "A_");
  EXPECT_EQ(encode_graph6(path_edges(3), 3).bytes, "Bg");
  EXPECT_EQ(encode_graph6(path_edges(4), 4).bytes, "Ch");
  EXPECT_EQ(encode_graph6(path_edges(8), 8).bytes, "GhCGGC");
}

// Reference strings below were produced by an unrelated graph6/sparse6
// implementation.
TEST(EncodeGraph6, SpiderLiteral) {
  const WtiTree spider = testing::spider({1, 2, 3});
  EXPECT_EQ(encode_graph6(to_edge_list(spider), 7).bytes, "Fp_GG");
}

TEST(EncodeGraph6, LongSizeField) {
  const auto encoded = encode_graph6(path_edges(70), 70).bytes;
  EXPECT_EQ(encoded.substr(0, 8), "~?@EhCGG");
  EXPECT_EQ(decode_graph6(encoded).order, 70);
}

TEST(EncodeGraph6, RejectsOrderOutsideRange) {
  EXPECT_THROW(encode_graph6({}, 0), std::out_of_range);
  EXPECT_THROW(encode_graph6({}, kMaxEncodableOrder + 1), std::out_of_range);
  EXPECT_THROW(encode_sparse6({}, 0), std::out_of_range);
}

TEST(EncodeSparse6, Literals) {
  EXPECT_EQ(encode_sparse6({}, 1).bytes, ":@");
  EXPECT_EQ(encode_sparse6({}, 2).bytes, ":A");
  EXPECT_EQ(encode_sparse6(path_edges(2), 2).bytes, ":An");
  EXPECT_EQ(encode_sparse6(path_edges(3), 3).bytes, ":Bd");
  EXPECT_EQ(encode_sparse6(path_edges(4), 4).bytes, ":Cdv");
  EXPECT_EQ(encode_sparse6(path_edges(8), 8).bytes, ":GaYnLz");
  EXPECT_EQ(encode_sparse6(path_edges(16), 16).bytes, ":O`ESyTl^E\\Zxvv");
  EXPECT_EQ(encode_sparse6(path_edges(32), 32).bytes, ":__`abcdefghijklmnopqrstuvwxyz{|}");
  const WtiTree spider = testing::spider({1, 2, 3});
  EXPECT_EQ(encode_sparse6(to_edge_list(spider), 7).bytes, ":FaIbL");
}

TEST(EncodeSparse6, PowerOfTwoPaddingRule) {
  // n = 4 and the last vertex seen is n - 2: padding must start with a zero.
  const std::vector<Edge> triangle{{0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(encode_sparse6(triangle, 4).bytes, ":CcJ");
  const auto decoded = decode_sparse6(":CcJ");
  EXPECT_EQ(decoded.edges, (testing::EdgeSet{{0, 1}, {0, 2}, {1, 2}}));
}

TEST(EncodeParentList, Examples) {
  EXPECT_EQ(encode_parent_list(WtiTree::single_vertex()).bytes, "");
  EXPECT_EQ(encode_parent_list(testing::rooted_path(2)).bytes, "0");
  EXPECT_EQ(encode_parent_list(testing::spider({1, 2, 3})).bytes, "0 0 2 0 4 5");
}

TEST(Codecs, RoundTripOverPool) {
  const WtiPool pool = generate_wti_trees(12, 12);
  for (int k = 1; k <= 12; ++k) {
    for (const WtiTree& tree : pool[k]) {
      const auto edges = to_edge_list(tree);
      const auto g6 = encode_graph6(edges, k);
      const auto s6 = encode_sparse6(edges, k);
      ASSERT_EQ(g6.format, Format::kGraph6);
      ASSERT_EQ(s6.format, Format::kSparse6);
      ASSERT_EQ(s6.bytes.front(), ':');
      for (char c : g6.bytes) ASSERT_TRUE(c >= 63 && c <= 126);
      for (char c : s6.bytes.substr(1)) ASSERT_TRUE(c >= 63 && c <= 126);

      const auto from_g6 = decode_graph6(g6.bytes);
      const auto from_s6 = decode_sparse6(s6.bytes);
      ASSERT_EQ(from_g6.order, k);
      ASSERT_EQ(from_s6.order, k);
      ASSERT_EQ(from_g6.edges, edge_set(tree));
      ASSERT_EQ(from_s6.edges, edge_set(tree));
    }
  }
}

TEST(Codecs, ParentListReparsesToSameTransmissions) {
  const WtiPool pool = generate_wti_trees(10, 10);
  for (int k = 1; k <= 10; ++k) {
    for (const WtiTree& tree : pool[k]) {
      std::vector<int> parents{0};
      const std::string text = encode_parent_list(tree).bytes;
      std::size_t pos = 0;
      while (pos < text.size()) {
        std::size_t used = 0;
        parents.push_back(std::stoi(text.substr(pos), &used));
        pos += used + 1;
      }
      ASSERT_EQ(static_cast<int>(parents.size()), k);
      const auto adjacency = oracle::AdjacencyTree::from_parents(parents);
      auto bfs = oracle::transmissions_bfs(adjacency);
      std::vector<int> stored(tree.transmissions().begin(), tree.transmissions().end());
      std::sort(bfs.begin(), bfs.end());
      std::sort(stored.begin(), stored.end());
      ASSERT_EQ(bfs, stored);
    }
  }
}

}  // namespace
}  // namespace tigen
