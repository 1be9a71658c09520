#pragma once

// Naive reference implementations. They share nothing with the library
// beyond Graph storage: labelings are enumerated exhaustively and
// connectivity is checked with a fresh union-find.

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "partctl/graph.hpp"

namespace oracle {

using partctl::Graph;
using Tuple = std::vector<int>;
using Profile = std::set<Tuple, std::greater<Tuple>>;

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void join(int a, int b) { up[find(a)] = find(b); }
};

inline Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return partctl::build_graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  e.emplace_back(0, n - 1);
  return partctl::build_graph(n, e);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return partctl::build_graph(n, e);
}

inline Graph star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return partctl::build_graph(leaves + 1, e);
}

// Edges with label c form one connected graph on their endpoints.
inline bool edge_class_connected(const Graph& g, const std::vector<int>& label, int c) {
  UnionFind uf(g.num_vertices());
  int first = -1, edges = 0;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (label[e] != c) continue;
    ++edges;
    uf.join(g.edge(e).u, g.edge(e).v);
    first = g.edge(e).u;
  }
  if (edges == 0) return false;
  for (int e = 0; e < g.num_edges(); ++e)
    if (label[e] == c && uf.find(g.edge(e).u) != uf.find(first)) return false;
  return true;
}

inline bool vertex_class_connected(const Graph& g, const std::vector<int>& label, int c) {
  UnionFind uf(g.num_vertices());
  for (const auto& e : g.edges())
    if (label[e.u] == c && label[e.v] == c) uf.join(e.u, e.v);
  int root = -1;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (label[v] != c) continue;
    if (root < 0) root = uf.find(v);
    if (uf.find(v) != root) return false;
  }
  return root >= 0;
}

// Calls f(label) for every map {0..len-1} -> {0..k-1}.
inline void for_each_labeling(int len, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> label(len, 0);
  while (true) {
    f(label);
    int i = 0;
    while (i < len && label[i] == k - 1) label[i++] = 0;
    if (i == len) return;
    ++label[i];
  }
}

inline Tuple sorted_sizes(const std::vector<int>& label, int k) {
  Tuple sizes(k, 0);
  for (int c : label) ++sizes[c];
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

inline Profile edge_profile(const Graph& g, int k) {
  Profile out;
  for_each_labeling(g.num_edges(), k, [&](const std::vector<int>& label) {
    for (int c = 0; c < k; ++c)
      if (!edge_class_connected(g, label, c)) return;
    out.insert(sorted_sizes(label, k));
  });
  return out;
}

inline Profile vertex_profile(const Graph& g, int k) {
  Profile out;
  for_each_labeling(g.num_vertices(), k, [&](const std::vector<int>& label) {
    for (int c = 0; c < k; ++c)
      if (!vertex_class_connected(g, label, c)) return;
    out.insert(sorted_sizes(label, k));
  });
  return out;
}

inline int connected_max_cut(const Graph& g, int r) {
  int best = -1;
  for_each_labeling(g.num_vertices(), r, [&](const std::vector<int>& label) {
    for (int c = 0; c < r; ++c)
      if (!vertex_class_connected(g, label, c)) return;
    int cut = 0;
    for (const auto& e : g.edges()) cut += label[e.u] != label[e.v];
    best = std::max(best, cut);
  });
  return best;
}

// Some connected vertex partition with the given ordered sizes exists.
inline bool sizes_realizable(const Graph& g, const std::vector<int>& sizes) {
  const int k = static_cast<int>(sizes.size());
  bool found = false;
  for_each_labeling(g.num_vertices(), k, [&](const std::vector<int>& label) {
    if (found) return;
    std::vector<int> count(k, 0);
    for (int c : label) ++count[c];
    if (count != sizes) return;
    for (int c = 0; c < k; ++c)
      if (!vertex_class_connected(g, label, c)) return;
    found = true;
  });
  return found;
}

// Number of multisets of k positive integers summing to n.
inline long long partitions_into(int n, int k, int max_part) {
  if (k == 0) return n == 0 ? 1 : 0;
  long long total = 0;
  for (int first = std::min(n, max_part); first >= 1; --first)
    total += partitions_into(n - first, k - 1, first);
  return total;
}
inline long long partitions_into(int n, int k) { return partitions_into(n, k, n); }

// G stays connected after deleting any set of fewer than k vertices.
inline bool k_connected(const Graph& g, int k) {
  const int n = g.num_vertices();
  if (n <= k) return false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) >= k) continue;
    UnionFind uf(n);
    for (const auto& e : g.edges())
      if (!(mask >> e.u & 1) && !(mask >> e.v & 1)) uf.join(e.u, e.v);
    int root = -1;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) continue;
      if (root < 0) root = uf.find(v);
      if (uf.find(v) != root) return false;
    }
  }
  return true;
}

// Whether some k pairwise disjoint edge sets are each spanning trees.
inline bool has_disjoint_spanning_trees(const Graph& g, int k) {
  const int n = g.num_vertices(), m = g.num_edges();
  std::vector<unsigned> trees;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) != n - 1) continue;
    UnionFind uf(n);
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!(mask >> e & 1)) continue;
      const int a = uf.find(g.edge(e).u), b = uf.find(g.edge(e).v);
      if (a == b) acyclic = false;
      uf.join(a, b);
    }
    if (acyclic) trees.push_back(mask);
  }
  std::function<bool(int, unsigned, std::size_t)> pick = [&](int left, unsigned used,
                                                             std::size_t from) {
    if (left == 0) return true;
    for (std::size_t i = from; i < trees.size(); ++i)
      if (!(trees[i] & used) && pick(left - 1, used | trees[i], i + 1)) return true;
    return false;
  };
  return pick(k, 0, 0);
}

}  // namespace oracle
