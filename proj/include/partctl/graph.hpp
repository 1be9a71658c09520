#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "partctl/bitset.hpp"
#include "partctl/error.hpp"

namespace partctl {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;  // u < v
  Vertex v;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

// Simple undirected graph, immutable after construction. Vertices are
// 0..n-1, edge ids are positions in the edge list. Incidence lists are
// sorted by neighbor id.
class Graph {
 public:
  Graph() = default;

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  // 2m/n; zero for the empty graph.
  double average_degree() const noexcept {
    return n_ == 0 ? 0.0 : 2.0 * num_edges() / n_;
  }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Incidence> incident(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  VertexSet all_vertices() const { return VertexSet::full(n_); }
  EdgeSet all_edges() const { return EdgeSet::full(num_edges()); }

  friend Graph build_graph(int n, std::span<const std::pair<int, int>> pairs);

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// Throws Error{SelfLoop | DuplicateEdge | VertexOutOfRange}.
Graph build_graph(int n, std::span<const std::pair<int, int>> pairs);
inline Graph build_graph(int n, std::initializer_list<std::pair<int, int>> pairs) {
  return build_graph(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}
inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  return build_graph(n, std::span<const std::pair<int, int>>(pairs));
}

// Same graph without edge e; later edge ids shift down by one.
Graph without_edge(const Graph& g, EdgeId e);

// Tree with a designated root. Vertex ids are shared with the host graph
// when produced by spanning_tree(); host_edge maps tree edges back.
struct RootedTree {
  Graph graph;
  Vertex root = 0;
  std::vector<Vertex> parent;     // parent[root] == -1
  std::vector<EdgeId> host_edge;  // tree edge id -> host edge id

  int num_vertices() const noexcept { return graph.num_vertices(); }

  // Validates that g is a tree and roots it. Throws Disconnected or
  // OutOfRange (root, or g not acyclic).
  static RootedTree from_graph(Graph g, Vertex root);
};

// A materialized induced subgraph with maps back to the host ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> host_vertex;
  std::vector<EdgeId> host_edge;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices);

// Edges with both ends in `vertices`.
EdgeSet induced_edges(const Graph& g, const VertexSet& vertices);
// Vertices touched by the edges of f.
VertexSet edge_span(const Graph& g, const EdgeSet& f);

bool is_connected(const Graph& g);
// Throws EmptySet when s is empty.
bool is_connected_vertex_set(const Graph& g, const VertexSet& s);
bool is_connected_edge_set(const Graph& g, const EdgeSet& f);

// Components of g - removed, ordered by smallest vertex id.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
// Components of g[within].
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);

// BFS tree, neighbors visited in ascending id. Throws Disconnected.
RootedTree spanning_tree(const Graph& g, Vertex root);

int min_degree(const Graph& g);
int min_degree_within(const Graph& g, const VertexSet& within);

// Biconnected blocks (vertex sets), ordered by their sorted vertex lists.
// Isolated vertices form singleton blocks.
std::vector<VertexSet> blocks(const Graph& g);
bool is_biconnected(const Graph& g);

// Ordering with s first, t last, where every proper prefix and suffix
// induces a connected subgraph. Throws NotBiconnected.
std::vector<Vertex> st_numbering(const Graph& g, Vertex s, Vertex t);

}  // namespace partctl
