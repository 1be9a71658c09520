#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "partctl/graph.hpp"
#include "partctl/partition.hpp"

namespace partctl {

// Size limits for the exhaustive solvers. Exceeding any of them raises
// Errc::TooLarge; results are never truncated.
struct ExactBudget {
  std::map<int, int> max_edges{{2, 40}, {3, 20}, {4, 16}};
  int default_max_edges = 14;
  std::map<int, int> max_vertices{{2, 24}, {3, 18}, {4, 14}};
  int default_max_vertices = 12;
  // Search nodes visited across one top-level call.
  std::uint64_t max_nodes = 4'000'000'000ULL;

  int edge_limit(int k) const;
  int vertex_limit(int k) const;

  // Lifts the per-k size limits up to the 64-element mask width.
  static ExactBudget unbounded_sizes();
};

struct EdgeProfileResult {
  SizeProfile profile;
  std::map<SizeTuple, EdgePartition, std::greater<SizeTuple>> witnesses;
  // Set when the graph has fewer than k edges; the profile is then empty.
  bool fewer_edges_than_parts = false;
  std::uint64_t nodes = 0;

  int value() const { return static_cast<int>(profile.size()); }
};

struct VertexProfileResult {
  SizeProfile profile;
  std::map<SizeTuple, VertexPartition, std::greater<SizeTuple>> witnesses;
  bool fewer_vertices_than_parts = false;
  std::uint64_t nodes = 0;

  int value() const { return static_cast<int>(profile.size()); }
};

struct CutWitness {
  VertexPartition partition;
  int cut_size = 0;
};

// Exact P(G,k) with one witness per size tuple. Throws Disconnected,
// TooLarge.
EdgeProfileResult edge_partition_profile(const Graph& g, int k, const ExactBudget& budget = {});

// Exact pi(G,k) with one witness per size tuple.
VertexProfileResult vertex_partition_profile(const Graph& g, int k,
                                             const ExactBudget& budget = {});

// Maximum number of crossing edges over partitions of V into r connected
// parts. Throws Disconnected, TooLarge, TooSmall (n < r).
CutWitness cmc(const Graph& g, int r, const ExactBudget& budget = {});

// A partition into connected parts with |V_i| = sizes[i], or nullopt.
// Two parts on a biconnected graph come from an st-numbering prefix; every
// other case is an exhaustive search limited to 16 vertices. Throws
// SizeMismatch, TooLarge.
std::optional<VertexPartition> gyori_lovasz(const Graph& g, std::span<const int> sizes,
                                            const ExactBudget& budget = {});

}  // namespace partctl
