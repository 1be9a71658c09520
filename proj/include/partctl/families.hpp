#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "partctl/graph.hpp"

namespace partctl {

// Complete ternary tree of height ell with every leaf identified with the
// middle vertex of a 5-vertex path: n = 4*3^ell + sum_{i<=ell} 3^i.
// Labeled breadth-first from the root. Throws OutOfRange (ell < 1 or
// ell > 12).
RootedTree make_T_ell(int ell);

// n = sum_{i<=height} 3^i. Throws OutOfRange above height 12.
RootedTree make_complete_ternary(int height);

// Complete binary tree of height h1+h2 in heap order (children of v are
// 2v+1, 2v+2) whose depth-h1 subtrees are completed into cliques.
// m = 2^{h1+1} - 2 + 2^{h1} * C(2^{h2+1} - 1, 2). Throws OutOfRange when
// h1 < 1, h2 < 0 or n > 2^15.
Graph make_binary_clique_graph(int h1, int h2);

struct NonmonotoneExample {
  Graph graph;
  EdgeId distinguished;  // the edge (30,31) in 1-based labels
};

// Complete binary tree on 31 vertices plus 8 edges joining sibling leaves,
// relabeled 0-based (vertex i+1 becomes i).
NonmonotoneExample make_nonmonotone_example();

// Random generator: std::mt19937_64 seeded with the 64-bit seed; bounded
// draws take raw 64-bit outputs by rejection (uniform_below), so the
// stream is identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound).
  std::uint64_t uniform_below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::int64_t uniform_in(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform_below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::mt19937_64 engine_;
};

// Uniform labeled tree (Prüfer decoding) plus m-(n-1) distinct uniformly
// chosen extra edges; edges sorted lexicographically. Throws
// InfeasibleDensity unless n-1 <= m <= C(n,2).
Graph random_connected_graph(int n, std::int64_t m, std::uint64_t seed);

}  // namespace partctl
