#include "tigen/oracle.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace tigen::oracle {

AdjacencyTree::AdjacencyTree(int order, std::span<const std::pair<int, int>> edges) {
  if (order < 1) throw std::invalid_argument("tree order must be positive");
  if (static_cast<int>(edges.size()) != order - 1) {
    throw std::invalid_argument("a tree on n vertices has n - 1 edges");
  }
  adjacency_.resize(static_cast<std::size_t>(order));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order || u == v) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  const auto dist = bfs_distances(*this, 0);
  if (std::find(dist.begin(), dist.end(), -1) != dist.end()) {
    throw std::invalid_argument("edges do not connect all vertices");
  }
}

AdjacencyTree AdjacencyTree::from_parents(std::span<const int> parents) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t x = 1; x < parents.size(); ++x) {
    edges.emplace_back(parents[x], static_cast<int>(x));
  }
  return AdjacencyTree(static_cast<int>(parents.size()), edges);
}

AdjacencyTree AdjacencyTree::from_level_sequence(std::span<const int> levels) {
  if (levels.empty() || levels[0] != 0) throw std::invalid_argument("bad level sequence");
  std::vector<int> last_at_level(levels.size(), -1);
  std::vector<std::pair<int, int>> edges;
  last_at_level[0] = 0;
  for (std::size_t i = 1; i < levels.size(); ++i) {
    const int level = levels[i];
    if (level < 1 || level > levels[i - 1] + 1) throw std::invalid_argument("bad level sequence");
    edges.emplace_back(last_at_level[static_cast<std::size_t>(level - 1)], static_cast<int>(i));
    last_at_level[static_cast<std::size_t>(level)] = static_cast<int>(i);
  }
  return AdjacencyTree(static_cast<int>(levels.size()), edges);
}

std::vector<std::pair<int, int>> AdjacencyTree::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> bfs_distances(const AdjacencyTree& tree, int source) {
  std::vector<int> dist(static_cast<std::size_t>(tree.order()), -1);
  std::queue<int> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : tree.neighbors(u)) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

std::vector<int> transmissions_bfs(const AdjacencyTree& tree) {
  std::vector<int> result;
  result.reserve(static_cast<std::size_t>(tree.order()));
  for (int v = 0; v < tree.order(); ++v) {
    const auto dist = bfs_distances(tree, v);
    int sum = 0;
    for (int d : dist) sum += d;
    result.push_back(sum);
  }
  return result;
}

bool is_ti_graph(const AdjacencyTree& tree) {
  auto values = transmissions_bfs(tree);
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

int max_degree(const AdjacencyTree& tree) {
  std::size_t best = 0;
  for (int v = 0; v < tree.order(); ++v) best = std::max(best, tree.neighbors(v).size());
  return static_cast<int>(best);
}

namespace {

// BFS order from root together with parent links.
struct RootedView {
  std::vector<int> order;
  std::vector<int> parent;
};

RootedView root_at(const AdjacencyTree& tree, int root) {
  RootedView view;
  view.parent.assign(static_cast<std::size_t>(tree.order()), -1);
  view.order.reserve(static_cast<std::size_t>(tree.order()));
  view.order.push_back(root);
  view.parent[static_cast<std::size_t>(root)] = root;
  for (std::size_t head = 0; head < view.order.size(); ++head) {
    const int u = view.order[head];
    for (int v : tree.neighbors(u)) {
      if (view.parent[static_cast<std::size_t>(v)] < 0) {
        view.parent[static_cast<std::size_t>(v)] = u;
        view.order.push_back(v);
      }
    }
  }
  return view;
}

}  // namespace

std::vector<int> centroids(const AdjacencyTree& tree) {
  const int n = tree.order();
  const RootedView view = root_at(tree, 0);
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  std::vector<int> largest(static_cast<std::size_t>(n), 0);
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    const int v = *it;
    if (v == 0) break;
    const int p = view.parent[static_cast<std::size_t>(v)];
    size[static_cast<std::size_t>(p)] += size[static_cast<std::size_t>(v)];
    largest[static_cast<std::size_t>(p)] =
        std::max(largest[static_cast<std::size_t>(p)], size[static_cast<std::size_t>(v)]);
  }
  std::vector<int> weight(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    weight[static_cast<std::size_t>(v)] =
        std::max(largest[static_cast<std::size_t>(v)], n - size[static_cast<std::size_t>(v)]);
  }
  const int best = *std::min_element(weight.begin(), weight.end());
  std::vector<int> result;
  for (int v = 0; v < n; ++v) {
    if (weight[static_cast<std::size_t>(v)] == best) result.push_back(v);
  }
  return result;
}

std::string rooted_canonical_form(const AdjacencyTree& tree, int root) {
  const int n = tree.order();
  const RootedView view = root_at(tree, root);
  std::vector<std::vector<std::pair<int, std::string>>> children(static_cast<std::size_t>(n));
  std::vector<int> size(static_cast<std::size_t>(n), 1);
  std::string encoded;
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    const int v = *it;
    auto& kids = children[static_cast<std::size_t>(v)];
    std::sort(kids.begin(), kids.end());
    encoded = "(";
    for (auto& [kid_size, kid] : kids) {
      size[static_cast<std::size_t>(v)] += kid_size;
      encoded += kid;
    }
    encoded += ")";
    kids.clear();
    if (v != root) {
      children[static_cast<std::size_t>(view.parent[static_cast<std::size_t>(v)])].emplace_back(
          size[static_cast<std::size_t>(v)], std::move(encoded));
    }
  }
  return encoded;
}

std::string canonical_form(const AdjacencyTree& tree) {
  const auto centers = centroids(tree);
  std::string best = rooted_canonical_form(tree, centers[0]);
  if (centers.size() == 2) best = std::min(best, rooted_canonical_form(tree, centers[1]));
  return best;
}

void enumerate_rooted_level_sequences(int n,
                                      const std::function<void(std::span<const int>)>& emit) {
  if (n < 1) return;
  std::vector<int> levels(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) levels[static_cast<std::size_t>(i)] = i;
  for (;;) {
    emit(levels);
    int p = n - 1;
    while (p > 0 && levels[static_cast<std::size_t>(p)] <= 1) --p;
    if (p == 0) return;
    int q = p - 1;
    while (levels[static_cast<std::size_t>(q)] != levels[static_cast<std::size_t>(p)] - 1) --q;
    const int gap = p - q;
    for (int i = p; i < n; ++i) {
      levels[static_cast<std::size_t>(i)] = levels[static_cast<std::size_t>(i - gap)];
    }
  }
}

void enumerate_free_trees(int n, const std::function<void(const AdjacencyTree&)>& emit) {
  if (n < 1 || n > kMaxOracleOrder) throw std::invalid_argument("oracle order out of range");

  // One centroid: every root subtree strictly below n / 2.
  enumerate_rooted_level_sequences(n, [&](std::span<const int> levels) {
    int run = 0;
    for (std::size_t i = 1; i <= levels.size(); ++i) {
      if (i == levels.size() || levels[i] == 1) {
        if (2 * run >= n) return;
        run = 0;
      }
      if (i < levels.size()) ++run;
    }
    emit(AdjacencyTree::from_level_sequence(levels));
  });

  // Two centroids: halves of order n / 2 joined root to root.
  if (n % 2 != 0 || n < 2) return;
  const int half = n / 2;
  std::vector<std::vector<int>> halves;
  enumerate_rooted_level_sequences(
      half, [&](std::span<const int> levels) { halves.emplace_back(levels.begin(), levels.end()); });
  std::vector<int> joined(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < halves.size(); ++i) {
    for (std::size_t j = i; j < halves.size(); ++j) {
      std::copy(halves[i].begin(), halves[i].end(), joined.begin());
      std::transform(halves[j].begin(), halves[j].end(), joined.begin() + half,
                     [](int level) { return level + 1; });
      emit(AdjacencyTree::from_level_sequence(joined));
    }
  }
}

void enumerate_labeled_trees(int n, const std::function<void(const AdjacencyTree&)>& emit) {
  if (n < 1 || n > 9) throw std::invalid_argument("labeled enumeration order out of range");
  if (n == 1) {
    emit(AdjacencyTree(1, {}));
    return;
  }
  const auto len = static_cast<std::size_t>(n - 2);
  std::vector<int> code(len, 0);
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> edges;
  for (;;) {
    // Decode: repeatedly join the smallest leaf to the next code entry.
    std::fill(degree.begin(), degree.end(), 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    edges.clear();
    for (int c : code) {
      int leaf = 0;
      while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
      edges.emplace_back(leaf, c);
      --degree[static_cast<std::size_t>(leaf)];
      --degree[static_cast<std::size_t>(c)];
    }
    int a = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[static_cast<std::size_t>(v)] == 1) {
        if (a < 0) {
          a = v;
        } else {
          edges.emplace_back(a, v);
          break;
        }
      }
    }
    emit(AdjacencyTree(n, edges));

    std::size_t i = len;
    while (i > 0) {
      --i;
      if (++code[i] < n) break;
      code[i] = 0;
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

std::size_t count_free_trees_by_pruefer(int n) {
  std::set<std::string> forms;
  enumerate_labeled_trees(n, [&](const AdjacencyTree& tree) { forms.insert(canonical_form(tree)); });
  return forms.size();
}

}  // namespace tigen::oracle
