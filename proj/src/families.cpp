#include "partctl/families.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>

namespace partctl {

namespace {

// Breadth-first generation: children(v, depth) gives how many children a
// vertex at that depth (and of that kind) receives.
struct LevelNode {
  int depth;
  int kind;  // 0: branching, 1: path middle neighbor, 2: path end
};

RootedTree build_layered_tree(int ternary_height, bool attach_paths) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<LevelNode> nodes{{0, 0}};
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    const LevelNode cur = nodes[v];
    int children = 0, child_kind = 0;
    if (cur.kind == 0) {
      if (cur.depth < ternary_height) {
        children = 3;
      } else if (attach_paths) {
        children = 2;
        child_kind = 1;
      }
    } else if (cur.kind == 1) {
      children = 1;
      child_kind = 2;
    }
    for (int c = 0; c < children; ++c) {
      pairs.emplace_back(static_cast<int>(v), static_cast<int>(nodes.size()));
      nodes.push_back({cur.depth + 1, child_kind});
    }
  }
  return RootedTree::from_graph(build_graph(static_cast<int>(nodes.size()), pairs), 0);
}

}  // namespace

RootedTree make_T_ell(int ell) {
  if (ell < 1 || ell > 12) throw Error(Errc::OutOfRange, "T(ell) needs 1 <= ell <= 12");
  return build_layered_tree(ell, true);
}

RootedTree make_complete_ternary(int height) {
  if (height < 0 || height > 12)
    throw Error(Errc::OutOfRange, "ternary height must be in 0..12");
  return build_layered_tree(height, false);
}

Graph make_binary_clique_graph(int h1, int h2) {
  if (h1 < 1 || h2 < 0 || h1 + h2 + 1 > 15)
    throw Error(Errc::OutOfRange, "binary clique graph needs h1 >= 1, h2 >= 0, h1+h2 <= 14");
  const int n = (1 << (h1 + h2 + 1)) - 1;
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) pairs.emplace_back((v - 1) / 2, v);
  const int first_at_depth = (1 << h1) - 1;
  for (int root = first_at_depth; root < 2 * first_at_depth + 1; ++root) {
    std::vector<int> sub{root};
    for (std::size_t i = 0; i < sub.size(); ++i) {
      const int c = 2 * sub[i] + 1;
      if (c < n) {
        sub.push_back(c);
        sub.push_back(c + 1);
      }
    }
    std::sort(sub.begin(), sub.end());
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j) {
        const int a = sub[i], b = sub[j];
        if ((b - 1) / 2 == a) continue;  // tree edge
        pairs.emplace_back(a, b);
      }
  }
  return build_graph(n, pairs);
}

NonmonotoneExample make_nonmonotone_example() {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= 15; ++i) {
    pairs.emplace_back(i - 1, 2 * i - 1);
    pairs.emplace_back(i - 1, 2 * i);
  }
  for (int i = 16; i <= 30; i += 2) pairs.emplace_back(i - 1, i);
  Graph g = build_graph(31, pairs);
  const EdgeId e = *g.find_edge(29, 30);
  return {std::move(g), e};
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::OutOfRange, "uniform_below(0)");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

Graph random_connected_graph(int n, std::int64_t m, std::uint64_t seed) {
  if (n < 1) throw Error(Errc::InfeasibleDensity, "n must be >= 1");
  const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m)
    throw Error(Errc::InfeasibleDensity, "m=" + std::to_string(m) + " outside [" +
                                             std::to_string(n - 1) + ", " +
                                             std::to_string(max_m) + "]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> pairs;
  if (n == 2) pairs.emplace_back(0, 1);
  if (n > 2) {
    std::vector<int> code(n - 2), degree(n, 1);
    for (int& c : code) {
      c = static_cast<int>(rng.uniform_below(n));
      ++degree[c];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (int c : code) {
      const int leaf = leaves.top();
      leaves.pop();
      pairs.emplace_back(std::min(leaf, c), std::max(leaf, c));
      if (--degree[c] == 1) leaves.push(c);
    }
    const int a = leaves.top();
    leaves.pop();
    const int b = leaves.top();
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }

  const std::int64_t extra = m - (n - 1);
  if (extra > 0) {
    std::set<std::pair<int, int>> taken(pairs.begin(), pairs.end());
    if (max_m <= 4'000'000) {
      std::vector<std::pair<int, int>> pool;
      pool.reserve(static_cast<std::size_t>(max_m - (n - 1)));
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!taken.count({u, v})) pool.emplace_back(u, v);
      for (std::int64_t i = 0; i < extra; ++i) {
        const auto j = i + static_cast<std::int64_t>(
                               rng.uniform_below(static_cast<std::uint64_t>(pool.size() - i)));
        std::swap(pool[i], pool[j]);
        pairs.push_back(pool[i]);
      }
    } else {
      while (static_cast<std::int64_t>(pairs.size()) < m) {
        int u = static_cast<int>(rng.uniform_below(n));
        int v = static_cast<int>(rng.uniform_below(n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (taken.insert({u, v}).second) pairs.emplace_back(u, v);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return build_graph(n, pairs);
}

}  // namespace partctl
