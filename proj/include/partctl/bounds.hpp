#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partctl/exact.hpp"
#include "partctl/graph.hpp"
#include "partctl/partition.hpp"

namespace partctl {

// A nonempty connected subgraph with minimum degree >= ceil(d(G)/2).
struct CoreSubgraph {
  VertexSet vertices;
  int min_degree = 0;
  std::vector<Vertex> peel_trace;  // removal order
};

// Repeatedly deletes the lowest-id vertex of degree < d(G)/2 (d of the
// input graph), then keeps the largest remaining component (ties: smallest
// vertex). Throws OutOfRange on the empty graph.
CoreSubgraph dense_core(const Graph& g);

// Greedy path inside g[within], started at its lowest vertex and extended
// at both ends until neither endpoint has a neighbor off the path. Has at
// least min_degree(g[within]) + 1 vertices.
std::vector<Vertex> long_path(const Graph& g, const VertexSet& within);
inline std::vector<Vertex> long_path(const Graph& h) { return long_path(h, h.all_vertices()); }

struct PathCutReport {
  int core_vertices = 0;
  int core_min_degree = 0;  // delta(H)
  int path_length = 0;      // before truncation
  int path_vertices = 0;    // t
  int cut_edges = 0;        // m_cut
  int emitted = 0;
  int distinct_pairs = 0;
};

struct PathCutResult {
  std::vector<EdgePartition> partitions;
  PathCutReport report;
};

// A path of t = ceil(delta(H)/2) core vertices (the window of the long path
// with the most edges leaving it); its leaving edges e_1..e_m are sorted
// by path position, then id. Partition l takes e_1..e_l, the edges among
// the path vertices up to e_l's, and every component of G - P touched by
// e_1..e_l. First parts strictly grow. Throws Disconnected.
PathCutResult path_cut_partitions(const Graph& g);

struct TreePacking {
  bool complete = false;       // all k forests span
  std::vector<EdgeSet> trees;  // forests when incomplete
  EdgeSet leftover;
};

// Matroid-partition augmentation: each edge in id order is inserted into
// some forest, possibly displacing a chain of edges along forest cycles
// (shortest exchange sequence found by BFS). Throws Disconnected.
TreePacking spanning_tree_packing(const Graph& g, int k);

struct PackingReport {
  int core_vertices = 0;
  int core_edges = 0;
  int leftover = 0;
  int outside_edges = 0;  // E(G) - E(H), added to the last part
  std::int64_t emitted = 0;
};

struct PackingResult {
  std::vector<EdgePartition> partitions;
  PackingReport report;
};

// k edge-disjoint spanning trees of the dense core, plus the leftover core
// edges dealt out in consecutive blocks for every multiset of block sizes.
// Throws Disconnected, PackingInfeasible, TooLarge (over 2e6 partitions).
PackingResult packing_partitions(const Graph& g, int k);

struct CutBoundReport {
  int core_vertices = 0;
  int core_min_degree = 0;
  std::vector<int> core_sizes;  // part sizes inside the core before attaching
  std::string method;           // st-numbering | exhaustive | region-growing
};

struct CutBoundResult {
  CutWitness witness;
  CutBoundReport report;
};

// r=2: an st-numbering prefix of the largest core block, of
// min(ceil(delta/2), |B|-1) vertices. r>=3: core parts of
// s = max(1, floor(delta/(2r))) vertices and one remainder part. Leftover
// components join the lowest part they touch. Throws Disconnected,
// TooSmall, ConstructionFailed.
CutBoundResult connected_cut_bound(const Graph& g, int r);

struct OrderedPartitionReport {
  std::vector<int> segment_lengths;
  std::int64_t attempted = 0;
  std::int64_t succeeded = 0;
  bool distinct_sizes = true;  // succeeded ordered size vectors pairwise distinct
};

struct OrderedPartitionResult {
  std::vector<VertexPartition> partitions;
  OrderedPartitionReport report;
};

// The long core path cut into k-1 consecutive segments; each tuple of
// prefix lengths gives parts X_1..X_{k-1}, X_k = rest of the core, kept
// when G[X_k] is connected. Components outside the core join the lowest
// part they touch. Throws Disconnected.
OrderedPartitionResult ordered_vertex_partitions(const Graph& g, int k);

}  // namespace partctl
