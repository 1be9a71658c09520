#include "partctl/graph.hpp"

#include <algorithm>
#include <list>
#include <queue>
#include <set>
#include <string>

namespace partctl {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::EmptySet: return "EmptySet";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotBiconnected: return "NotBiconnected";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::TooSmall: return "TooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::PackingInfeasible: return "PackingInfeasible";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::InfeasibleDensity: return "InfeasibleDensity";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

Graph build_graph(int n, std::span<const std::pair<int, int>> pairs) {
  if (n < 0) throw Error(Errc::VertexOutOfRange, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(pairs.size());
  g.adjacency_.assign(n, {});
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(Errc::VertexOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" +
                      std::to_string(n));
    if (a == b) throw Error(Errc::SelfLoop, "vertex " + std::to_string(a));
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.emplace(e.u, e.v).second)
      throw Error(Errc::DuplicateEdge,
                  "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    const EdgeId id = static_cast<EdgeId>(g.edges_.size());
    g.edges_.push_back(e);
    g.adjacency_[e.u].push_back({e.v, id});
    g.adjacency_[e.v].push_back({e.u, id});
  }
  for (auto& inc : g.adjacency_)
    std::sort(inc.begin(), inc.end(),
              [](const Incidence& x, const Incidence& y) { return x.neighbor < y.neighbor; });
  return g;
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a < 0 || a >= n_ || b < 0 || b >= n_) return std::nullopt;
  const auto& inc = adjacency_[a];
  auto it = std::lower_bound(inc.begin(), inc.end(), b,
                             [](const Incidence& x, Vertex y) { return x.neighbor < y; });
  if (it != inc.end() && it->neighbor == b) return it->edge;
  return std::nullopt;
}

Graph without_edge(const Graph& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges()) throw Error(Errc::OutOfRange, "edge id");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.num_edges() - 1);
  for (EdgeId i = 0; i < g.num_edges(); ++i)
    if (i != e) pairs.emplace_back(g.edge(i).u, g.edge(i).v);
  return build_graph(g.num_vertices(), pairs);
}

RootedTree RootedTree::from_graph(Graph g, Vertex root) {
  const int n = g.num_vertices();
  if (root < 0 || root >= n) throw Error(Errc::OutOfRange, "root not a vertex");
  if (g.num_edges() != n - 1) throw Error(Errc::OutOfRange, "not a tree: m != n-1");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "not a tree");
  RootedTree t;
  t.root = root;
  t.parent.assign(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<Vertex> q;
  q.push(root);
  seen[root] = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (auto [w, e] : g.incident(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent[w] = v;
      q.push(w);
    }
  }
  t.host_edge.resize(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) t.host_edge[e] = e;
  t.graph = std::move(g);
  return t;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& vertices) {
  Subgraph sub;
  std::vector<int> local(g.num_vertices(), -1);
  vertices.for_each([&](int v) {
    local[v] = static_cast<int>(sub.host_vertex.size());
    sub.host_vertex.push_back(v);
  });
  std::vector<std::pair<int, int>> pairs;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (local[ed.u] >= 0 && local[ed.v] >= 0) {
      pairs.emplace_back(local[ed.u], local[ed.v]);
      sub.host_edge.push_back(e);
    }
  }
  sub.graph = build_graph(static_cast<int>(sub.host_vertex.size()), pairs);
  return sub;
}

EdgeSet induced_edges(const Graph& g, const VertexSet& vertices) {
  EdgeSet out(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (vertices.test(g.edge(e).u) && vertices.test(g.edge(e).v)) out.set(e);
  return out;
}

VertexSet edge_span(const Graph& g, const EdgeSet& f) {
  VertexSet out(g.num_vertices());
  f.for_each([&](int e) {
    out.set(g.edge(e).u);
    out.set(g.edge(e).v);
  });
  return out;
}

namespace {

// Vertices reachable from `start` inside `within`.
VertexSet reach_within(const Graph& g, const VertexSet& within, Vertex start) {
  VertexSet seen(g.num_vertices());
  std::vector<Vertex> stack{start};
  seen.set(start);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (auto [w, e] : g.incident(v)) {
      if (!within.test(w) || seen.test(w)) continue;
      seen.set(w);
      stack.push_back(w);
    }
  }
  return seen;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  return reach_within(g, g.all_vertices(), 0).count() == g.num_vertices();
}

bool is_connected_vertex_set(const Graph& g, const VertexSet& s) {
  const int start = s.first();
  if (start < 0) throw Error(Errc::EmptySet, "vertex set");
  return reach_within(g, s, start) == s;
}

bool is_connected_edge_set(const Graph& g, const EdgeSet& f) {
  const int first = f.first();
  if (first < 0) throw Error(Errc::EmptySet, "edge set");
  VertexSet seen(g.num_vertices());
  std::vector<Vertex> stack{g.edge(first).u};
  seen.set(g.edge(first).u);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (auto [w, e] : g.incident(v)) {
      if (!f.test(e) || seen.test(w)) continue;
      seen.set(w);
      stack.push_back(w);
    }
  }
  return seen == edge_span(g, f);
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> out;
  VertexSet left = within;
  for (int v = left.first(); v >= 0; v = left.first()) {
    VertexSet c = reach_within(g, within, v);
    left -= c;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  return components_within(g, removed.complement());
}

RootedTree spanning_tree(const Graph& g, Vertex root) {
  const int n = g.num_vertices();
  if (root < 0 || root >= n) throw Error(Errc::OutOfRange, "root not a vertex");
  RootedTree t;
  t.root = root;
  t.parent.assign(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<std::pair<int, int>> pairs;
  std::queue<Vertex> q;
  q.push(root);
  seen[root] = 1;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (auto [w, e] : g.incident(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent[w] = v;
      pairs.emplace_back(v, w);
      t.host_edge.push_back(e);
      q.push(w);
    }
  }
  if (static_cast<int>(pairs.size()) != n - 1) throw Error(Errc::Disconnected, "spanning_tree");
  t.graph = build_graph(n, pairs);
  return t;
}

int min_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    best = v == 0 ? g.degree(v) : std::min(best, g.degree(v));
  return best;
}

int min_degree_within(const Graph& g, const VertexSet& within) {
  int best = -1;
  within.for_each([&](int v) {
    int d = 0;
    for (auto [w, e] : g.incident(v)) d += within.test(w);
    best = best < 0 ? d : std::min(best, d);
  });
  return std::max(best, 0);
}

std::vector<VertexSet> blocks(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> pre(n, -1), low(n, 0);
  std::vector<EdgeId> edge_stack;
  std::vector<VertexSet> out;
  int counter = 0;

  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };

  for (Vertex r = 0; r < n; ++r) {
    if (pre[r] >= 0) continue;
    if (g.degree(r) == 0) {
      VertexSet b(n);
      b.set(r);
      out.push_back(std::move(b));
      pre[r] = counter++;
      continue;
    }
    std::vector<Frame> stack{{r, -1, 0}};
    pre[r] = low[r] = counter++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        auto [w, e] = inc[f.next++];
        if (e == f.via) continue;
        if (pre[w] < 0) {
          edge_stack.push_back(e);
          pre[w] = low[w] = counter++;
          stack.push_back({w, e, 0});
        } else if (pre[w] < pre[f.v]) {
          edge_stack.push_back(e);
          low[f.v] = std::min(low[f.v], pre[w]);
        }
        continue;
      }
      const Vertex w = f.v;
      const EdgeId via = f.via;
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex v = stack.back().v;
      low[v] = std::min(low[v], low[w]);
      if (low[w] >= pre[v]) {
        VertexSet b(n);
        while (true) {
          EdgeId top = edge_stack.back();
          edge_stack.pop_back();
          b.set(g.edge(top).u);
          b.set(g.edge(top).v);
          if (top == via) break;
        }
        out.push_back(std::move(b));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.to_vector() < b.to_vector();
  });
  return out;
}

bool is_biconnected(const Graph& g) {
  if (g.num_vertices() < 2 || !is_connected(g)) return false;
  return blocks(g).size() == 1;
}

std::vector<Vertex> st_numbering(const Graph& g, Vertex s, Vertex t) {
  const int n = g.num_vertices();
  if (s < 0 || s >= n || t < 0 || t >= n || s == t)
    throw Error(Errc::OutOfRange, "st_numbering needs distinct vertices s, t");
  if (!is_biconnected(g)) throw Error(Errc::NotBiconnected, "st_numbering");

  // DFS rooted at s whose first tree edge is s-t (virtual if absent).
  std::vector<int> pre(n, -1), low(n, 0);
  std::vector<Vertex> parent(n, -1), order;
  order.reserve(n);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  pre[s] = low[s] = 0;
  order.push_back(s);
  pre[t] = low[t] = 1;
  order.push_back(t);
  parent[t] = s;
  int counter = 2;
  std::vector<Frame> stack{{s, 0}, {t, 0}};
  // s keeps scanning its neighbors after t returns, but every vertex is
  // reachable through t in a biconnected graph.
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto inc = g.incident(f.v);
    if (f.next < inc.size()) {
      Vertex w = inc[f.next++].neighbor;
      if (pre[w] < 0) {
        pre[w] = low[w] = counter++;
        parent[w] = f.v;
        order.push_back(w);
        stack.push_back({w, 0});
      } else if (w != parent[f.v] && pre[w] < pre[f.v]) {
        low[f.v] = std::min(low[f.v], pre[w]);
      }
      continue;
    }
    const Vertex w = f.v;
    stack.pop_back();
    if (!stack.empty()) {
      Vertex v = stack.back().v;
      if (parent[w] == v) low[v] = std::min(low[v], low[w]);
    }
  }

  std::vector<Vertex> by_pre(n);
  for (Vertex v = 0; v < n; ++v) by_pre[pre[v]] = v;

  std::list<Vertex> seq{s, t};
  std::vector<std::list<Vertex>::iterator> pos(n);
  pos[s] = seq.begin();
  pos[t] = std::next(seq.begin());
  std::vector<char> minus(n, 0);
  minus[s] = 1;
  for (Vertex v : order) {
    if (v == s || v == t) continue;
    const Vertex p = parent[v];
    if (minus[by_pre[low[v]]]) {
      pos[v] = seq.insert(pos[p], v);
      minus[p] = 0;
    } else {
      pos[v] = seq.insert(std::next(pos[p]), v);
      minus[p] = 1;
    }
  }
  return {seq.begin(), seq.end()};
}

}  // namespace partctl
