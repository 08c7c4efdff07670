#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "support/test_support.hpp"
#include "tigen/enumeration.hpp"
#include "tigen/ti_generation.hpp"
#include "tigen/wti_tree.hpp"

namespace tigen {
namespace {

using testing::bfs_level_transmissions;
using testing::rooted_path;
using testing::spider;
using testing::stored_levels;
using Levels = std::vector<std::vector<int>>;

TEST(RootTransmissionOfJoin, Examples) {
  EXPECT_EQ(root_transmission_of_join({}, 1), 0);
  const std::vector<int> spider_children{0, 1, 3};
  EXPECT_EQ(root_transmission_of_join(spider_children, 7), 10);
  const std::vector<int> path_child{6};
  EXPECT_EQ(root_transmission_of_join(path_child, 5), 10);
}

TEST(ChildTransmissionStep, Examples) {
  EXPECT_EQ(child_transmission_step(10, 7, 1), 15);
  EXPECT_EQ(child_transmission_step(10, 7, 3), 11);
  // Two-vertex tree: the root has transmission 1, and so does its child.
  EXPECT_EQ(child_transmission_step(1, 2, 1), 1);
}

TEST(LiftLevel, Examples) {
  EXPECT_EQ(lift_level(std::vector<int>{1}, 12, 7, 2, 1), std::vector<int>{18});
  EXPECT_EQ(lift_level(std::vector<int>{2}, 8, 7, 3, 1), std::vector<int>{14});
  EXPECT_EQ(lift_level(std::vector<int>{3}, 8, 7, 3, 2), std::vector<int>{19});
  const std::vector<int> values{4, 9, 2};
  EXPECT_EQ(lift_level(values, 0, 11, 11, 3), values);
}

TEST(JoinWtiTrees, SingleVertex) {
  const WtiTree k1 = WtiTree::single_vertex();
  EXPECT_EQ(k1.order(), 1);
  EXPECT_EQ(k1.depth(), 0);
  EXPECT_EQ(stored_levels(k1), (Levels{{0}}));
  EXPECT_TRUE(satisfies_invariants(k1));
}

TEST(JoinWtiTrees, EdgeFromSingleChild) {
  const WtiTree edge = rooted_path(2);
  EXPECT_EQ(edge.order(), 2);
  EXPECT_EQ(edge.depth(), 1);
  EXPECT_EQ(stored_levels(edge), (Levels{{1}, {1}}));
}

TEST(JoinWtiTrees, SpiderWithLegsOneTwoThree) {
  const WtiTree tree = spider({1, 2, 3});
  EXPECT_EQ(tree.order(), 7);
  EXPECT_EQ(tree.depth(), 3);
  EXPECT_EQ(stored_levels(tree), (Levels{{10}, {15, 13, 11}, {18, 14}, {19}}));
  EXPECT_EQ(stored_levels(tree), bfs_level_transmissions(tree));
  const std::vector<Label> parents(tree.parents().begin() + 1, tree.parents().end());
  EXPECT_EQ(parents, (std::vector<Label>{0, 0, 2, 0, 4, 5}));
}

TEST(JoinWtiTrees, RepeatsAcrossLevelsAreAllowed) {
  const WtiTree tree = spider({1, 2, 4});
  const Levels levels = stored_levels(tree);
  ASSERT_GE(levels.size(), 2u);
  EXPECT_EQ(levels[0], std::vector<int>{14});
  EXPECT_EQ(levels[1], (std::vector<int>{20, 18, 14}));
  EXPECT_EQ(levels, bfs_level_transmissions(tree));
}

TEST(JoinWtiTrees, FailsOnRepeatedLevelTransmission) {
  // Level 2 of the join would hold transmission 20 twice.
  const WtiTree path3 = rooted_path(3);
  const WtiTree k1 = WtiTree::single_vertex();
  const WtiTree fork = *join_wti_trees(std::vector<WtiTree>{k1, rooted_path(2)});
  EXPECT_FALSE(join_wti_trees(std::vector<WtiTree>{path3, fork}).has_value());
}

TEST(JoinTiTree, AgreesWithJoinThenFilter) {
  const WtiPool pool = generate_wti_trees(8, 8);
  std::mt19937 rng(12345);
  int agreements = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    // Random nonempty subset of orders 1..8, taken in increasing order.
    const unsigned mask = std::uniform_int_distribution<unsigned>(1, 255)(rng);
    std::vector<const WtiTree*> tuple;
    for (int k = 1; k <= 8; ++k) {
      if ((mask >> (k - 1) & 1u) == 0) continue;
      const auto trees = pool[k];
      tuple.push_back(&trees[std::uniform_int_distribution<std::size_t>(0, trees.size() - 1)(rng)]);
    }
    const auto plain = join_wti_trees(tuple);
    const auto ti = join_ti_tree(tuple);
    const bool expected = plain.has_value() && is_ti_tree(*plain);
    ASSERT_EQ(ti.has_value(), expected);
    if (ti) {
      EXPECT_EQ(*ti, *plain);
      ++agreements;
    }
  }
  EXPECT_GT(agreements, 0);
}

// Stored level lists are exactly the BFS transmissions in label order.
TEST(WtiTreeProperties, PoolTreesMatchBreadthFirstSearch) {
  const WtiPool pool = generate_wti_trees(12, 12);
  for (int k = 1; k <= 12; ++k) {
    for (const WtiTree& tree : pool[k]) {
      ASSERT_TRUE(satisfies_invariants(tree));
      ASSERT_EQ(stored_levels(tree), bfs_level_transmissions(tree));
    }
  }
}

TEST(WtiTreeProperties, EdgeStepIdentity) {
  const WtiPool pool = generate_wti_trees(10, 10);
  for (int k = 2; k <= 10; ++k) {
    for (const WtiTree& tree : pool[k]) {
      const auto adjacency = testing::to_adjacency(tree);
      const auto tr = oracle::transmissions_bfs(adjacency);
      const auto parents = tree.parents();
      for (int c = 1; c < k; ++c) {
        const int p = parents[c];
        const auto from_c = oracle::bfs_distances(adjacency, c);
        const auto from_p = oracle::bfs_distances(adjacency, p);
        int closer_to_c = 0;
        for (int w = 0; w < k; ++w) closer_to_c += from_c[w] < from_p[w] ? 1 : 0;
        ASSERT_EQ(tr[c] - tr[p], k - 2 * closer_to_c);
      }
    }
  }
}

}  // namespace
}  // namespace tigen
