#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partctl/arith.hpp"
#include "partctl/graph.hpp"
#include "partctl/partition.hpp"

namespace partctl {

// One (A_i, B_i, v_i) of a nested split sequence: A and B cover the tree,
// meet exactly in the pivot, and both induce subtrees.
struct Split {
  VertexSet a;
  VertexSet b;
  Vertex pivot;
};

struct SplitSequence {
  std::vector<Split> items;

  int length() const noexcept { return static_cast<int>(items.size()); }
};

// Nested split sequence of a tree, starting at its root. At each pivot the
// components of T - pivot are peeled off one at a time, a largest one
// (ties: smallest minimum vertex id) last; the walk then continues inside
// that component from the pivot's neighbor. Length >= t(n) + 1.
SplitSequence nested_split_sequence(const RootedTree& t);

// Same, restricted to tree[within]; sets are subsets of `within` but keep
// the host universe.
SplitSequence nested_split_sequence_within(const Graph& tree, const VertexSet& within,
                                           Vertex root);

// Checks: A_i ∩ B_i = {v_i}, A_i ∪ B_i = V, v_1 = root, v_i ∈ B_j for
// i < j; both sides induce connected subtrees; A strictly shrinks and B
// strictly grows; and, given a table, length >= t(n) + 1.
std::optional<std::string> check_split_sequence(const Graph& tree, const SplitSequence& seq,
                                                Vertex root, const TTable* table = nullptr);

// For every split: (E(G) - E(G[B_i]), E(G[B_i])), dropping those with an
// empty side. Second-part sizes strictly increase. Throws Disconnected.
std::vector<EdgePartition> two_partitions_from_splits(const Graph& g, const RootedTree& t);

// Vertex minimizing the largest component of T - v; ties by smallest id.
Vertex centroid(const Graph& tree);

// Connected k-edge-partitions built by splitting a spanning tree at its
// centroid and recursing with k-1 on each B-side. Ordered size tuples are
// pairwise distinct. Throws Disconnected, TooSmall (m < k), OutOfRange (k < 2).
std::vector<EdgePartition> recursive_k_partitions(const Graph& g, int k);

// Exact P(T,2) profile: every connected 2-edge-partition of a tree meets in
// one vertex and splits its branches, so the profile is the set of proper
// nonempty branch subset sums over all vertices.
SizeProfile tree_exact_P2(const Graph& tree);

// 2-partitions from a single split sequence placed either beside an edge
// splitting the tree in half, or inside the heaviest part around the
// centroid. At least t(n) - 2 of them.
std::vector<EdgePartition> tree_lower_bound_partitions(const Graph& tree);

}  // namespace partctl
