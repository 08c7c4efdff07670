#ifndef TIGEN_ORACLE_HPP
#define TIGEN_ORACLE_HPP

// Brute-force reference for the generator. Nothing here uses the incremental
// transmission arithmetic: distances come from breadth-first search and
// trees come from classical enumeration schemes.

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tigen::oracle {

/// Largest order the oracle agrees to enumerate.
inline constexpr int kMaxOracleOrder = 22;

class AdjacencyTree {
 public:
  /// Builds from n - 1 edges over labels 0..n-1. Throws
  /// std::invalid_argument unless the edges form a tree.
  AdjacencyTree(int order, std::span<const std::pair<int, int>> edges);

  /// Builds from a parent array; entry 0 is ignored.
  static AdjacencyTree from_parents(std::span<const int> parents);

  /// Builds from a level sequence (preorder depths, first entry 0).
  static AdjacencyTree from_level_sequence(std::span<const int> levels);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::span<const int> neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::vector<std::pair<int, int>> edges() const;

 private:
  AdjacencyTree() = default;
  std::vector<std::vector<int>> adjacency_;
};

/// Distances from `source` to every vertex.
std::vector<int> bfs_distances(const AdjacencyTree& tree, int source);

/// Entry v is the sum of distances from v, one BFS per vertex.
std::vector<int> transmissions_bfs(const AdjacencyTree& tree);

/// True iff all transmissions are pairwise distinct.
bool is_ti_graph(const AdjacencyTree& tree);

int max_degree(const AdjacencyTree& tree);

/// One or two centroid vertices, ascending.
std::vector<int> centroids(const AdjacencyTree& tree);

/// Isomorphism-invariant string for the tree rooted at `root`: each vertex
/// encodes as "(" + its children's encodings + ")", children sorted by
/// (subtree order, encoding).
std::string rooted_canonical_form(const AdjacencyTree& tree, int root);

/// Isomorphism-invariant string for the free tree: the rooted form at the
/// centroid, or the smaller of the two when there are two centroids.
std::string canonical_form(const AdjacencyTree& tree);

/// Emits every rooted unlabeled tree of order n exactly once as its
/// canonical level sequence, via the level-sequence successor rule.
void enumerate_rooted_level_sequences(int n,
                                      const std::function<void(std::span<const int>)>& emit);

/// Emits each free tree of order n exactly once up to isomorphism. Trees with
/// one centroid come from rooted level sequences whose root subtrees are all
/// below n / 2; trees with two come from unordered pairs of rooted trees of
/// order n / 2. Throws std::invalid_argument for n outside [1, 22].
void enumerate_free_trees(int n, const std::function<void(const AdjacencyTree&)>& emit);

/// Emits all n^(n-2) labeled trees on n vertices by decoding every Pruefer
/// sequence. Throws std::invalid_argument for n outside [1, 9].
void enumerate_labeled_trees(int n, const std::function<void(const AdjacencyTree&)>& emit);

/// Number of free trees of order n counted by labeled enumeration plus
/// canonical deduplication.
std::size_t count_free_trees_by_pruefer(int n);

}  // namespace tigen::oracle

#endif  // TIGEN_ORACLE_HPP
