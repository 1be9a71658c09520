#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "partctl/graph.hpp"

namespace partctl {

// Part sizes. Canonical tuples are sorted descending.
using SizeTuple = std::vector<int>;

SizeTuple canonical(SizeTuple sizes);

// Canonical tuples in descending lexicographic order; its size is P(G,k)
// or pi(G,k).
using SizeProfile = std::set<SizeTuple, std::greater<SizeTuple>>;

// k disjoint, nonempty, connected edge sets covering E(G).
struct EdgePartition {
  std::vector<EdgeSet> parts;

  SizeTuple sizes() const;  // in part order
};

// k disjoint, nonempty vertex sets covering V(G), each inducing a
// connected subgraph.
struct VertexPartition {
  std::vector<VertexSet> parts;

  SizeTuple sizes() const;
};

// Full validation; returns a description of the first violation.
std::optional<std::string> check_edge_partition(const Graph& g, const EdgePartition& p);
std::optional<std::string> check_vertex_partition(const Graph& g, const VertexPartition& p);

inline bool is_valid(const Graph& g, const EdgePartition& p) {
  return !check_edge_partition(g, p).has_value();
}
inline bool is_valid(const Graph& g, const VertexPartition& p) {
  return !check_vertex_partition(g, p).has_value();
}

// Edges with endpoints in different parts.
int cut_size(const Graph& g, const VertexPartition& p);

template <class Partition>
SizeProfile profile_of(const std::vector<Partition>& parts) {
  SizeProfile out;
  for (const auto& p : parts) out.insert(canonical(p.sizes()));
  return out;
}

}  // namespace partctl
