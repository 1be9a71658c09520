#include "partctl/bounds.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>

#include "partctl/arith.hpp"

namespace partctl {

CoreSubgraph dense_core(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) throw Error(Errc::OutOfRange, "dense_core of the empty graph");
  const long long m = g.num_edges();
  // degree < d/2 = m/n  <=>  degree * n < m
  auto low = [&](int deg) { return static_cast<long long>(deg) * n < m; };

  std::vector<int> deg(n);
  std::vector<char> alive(n, 1);
  std::set<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (low(deg[v])) queue.insert(v);
  }
  CoreSubgraph core;
  while (!queue.empty()) {
    const Vertex v = *queue.begin();
    queue.erase(queue.begin());
    alive[v] = 0;
    core.peel_trace.push_back(v);
    for (auto [w, e] : g.incident(v)) {
      if (!alive[w]) continue;
      if (low(--deg[w])) queue.insert(w);
    }
  }
  VertexSet left(n);
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) left.set(v);
  if (left.none()) throw Error(Errc::OutOfRange, "peeling emptied the graph");
  const auto comps = components_within(g, left);
  core.vertices = *std::max_element(
      comps.begin(), comps.end(),
      [](const VertexSet& a, const VertexSet& b) { return a.count() < b.count(); });
  core.min_degree = min_degree_within(g, core.vertices);
  return core;
}

std::vector<Vertex> long_path(const Graph& g, const VertexSet& within) {
  const int start = within.first();
  if (start < 0) throw Error(Errc::EmptySet, "long_path");
  std::deque<Vertex> path{start};
  VertexSet on(g.num_vertices());
  on.set(start);
  auto extend = [&](auto end, auto push) {
    while (true) {
      Vertex next = -1;
      for (auto [w, e] : g.incident(end())) {
        if (within.test(w) && !on.test(w)) {
          next = w;
          break;
        }
      }
      if (next < 0) return;
      on.set(next);
      push(next);
    }
  };
  extend([&] { return path.back(); }, [&](Vertex v) { path.push_back(v); });
  extend([&] { return path.front(); }, [&](Vertex v) { path.push_front(v); });
  return {path.begin(), path.end()};
}

PathCutResult path_cut_partitions(const Graph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "path_cut_partitions");
  const int n = g.num_vertices();
  PathCutResult res;
  auto& rep = res.report;
  const CoreSubgraph core = dense_core(g);
  rep.core_vertices = core.vertices.count();
  rep.core_min_degree = core.min_degree;
  const auto path = long_path(g, core.vertices);
  rep.path_length = static_cast<int>(path.size());
  const int t = std::min<int>(std::max(1, (core.min_degree + 1) / 2), path.size());
  rep.path_vertices = t;

  // Window of t consecutive path vertices with the most leaving edges.
  std::vector<int> leaving_at(path.size(), 0);
  std::size_t best_start = 0;
  int best_cut = -1;
  for (std::size_t s = 0; s + t <= path.size(); ++s) {
    VertexSet window(n);
    for (int i = 0; i < t; ++i) window.set(path[s + i]);
    int cut = 0;
    for (int i = 0; i < t; ++i)
      for (auto [w, e] : g.incident(path[s + i])) cut += !window.test(w);
    if (cut > best_cut) {
      best_cut = cut;
      best_start = s;
    }
  }
  std::vector<int> pos(n, -1);
  for (int i = 0; i < t; ++i) pos[path[best_start + i]] = i;

  struct CutEdge {
    int pos;
    EdgeId id;
    Vertex outside;
  };
  std::vector<CutEdge> cut;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    const bool in_u = pos[ed.u] >= 0, in_v = pos[ed.v] >= 0;
    if (in_u == in_v) continue;
    cut.push_back(in_u ? CutEdge{pos[ed.u], e, ed.v} : CutEdge{pos[ed.v], e, ed.u});
  }
  std::sort(cut.begin(), cut.end(), [](const CutEdge& a, const CutEdge& b) {
    return a.pos != b.pos ? a.pos < b.pos : a.id < b.id;
  });
  rep.cut_edges = static_cast<int>(cut.size());

  // Components of G - P and their edges.
  VertexSet on_path(n);
  for (int i = 0; i < t; ++i) on_path.set(path[best_start + i]);
  const auto comps = components(g, on_path);
  std::vector<int> comp_of(n, -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    comps[c].for_each([&](int v) { comp_of[v] = static_cast<int>(c); });
  std::vector<std::vector<EdgeId>> comp_edges(comps.size());
  std::vector<std::vector<EdgeId>> path_edges_by_top(t);  // edges inside P by larger position
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (pos[ed.u] < 0 && pos[ed.v] < 0) comp_edges[comp_of[ed.u]].push_back(e);
    if (pos[ed.u] >= 0 && pos[ed.v] >= 0)
      path_edges_by_top[std::max(pos[ed.u], pos[ed.v])].push_back(e);
  }

  EdgeSet first(g.num_edges());
  std::vector<char> attached(comps.size(), 0);
  int covered_pos = -1;
  const EdgeSet all = g.all_edges();
  SizeProfile pairs;
  for (const CutEdge& ce : cut) {
    first.set(ce.id);
    while (covered_pos < ce.pos) {
      ++covered_pos;
      for (EdgeId e : path_edges_by_top[covered_pos]) first.set(e);
    }
    const int c = comp_of[ce.outside];
    if (!attached[c]) {
      attached[c] = 1;
      for (EdgeId e : comp_edges[c]) first.set(e);
    }
    EdgeSet second = all - first;
    if (second.none()) continue;
    EdgePartition p{{first, std::move(second)}};
    pairs.insert(canonical(p.sizes()));
    res.partitions.push_back(std::move(p));
  }
  rep.emitted = static_cast<int>(res.partitions.size());
  rep.distinct_pairs = static_cast<int>(pairs.size());
  return res;
}

namespace {

// k forests over a fixed vertex set with per-forest adjacency.
class Forests {
 public:
  Forests(const Graph& g, int k)
      : g_(g), owner_(g.num_edges(), -1), adj_(k, std::vector<std::vector<Incidence>>(g.num_vertices())),
        sizes_(k, 0) {}

  int owner(EdgeId e) const { return owner_[e]; }
  int size(int f) const { return sizes_[f]; }
  int count() const { return static_cast<int>(sizes_.size()); }

  void move(EdgeId e, int to) {
    const Edge& ed = g_.edge(e);
    if (owner_[e] >= 0) {
      auto drop = [&](Vertex a, EdgeId id) {
        auto& lst = adj_[owner_[e]][a];
        lst.erase(std::find_if(lst.begin(), lst.end(),
                               [&](const Incidence& x) { return x.edge == id; }));
      };
      drop(ed.u, e);
      drop(ed.v, e);
      --sizes_[owner_[e]];
    }
    owner_[e] = to;
    if (to >= 0) {
      adj_[to][ed.u].push_back({ed.v, e});
      adj_[to][ed.v].push_back({ed.u, e});
      ++sizes_[to];
    }
  }

  // Edges on the forest path from a to b, or empty when they are in
  // different trees.
  std::vector<EdgeId> path(int f, Vertex a, Vertex b) const {
    std::vector<EdgeId> via(g_.num_vertices(), -1);
    std::vector<char> seen(g_.num_vertices(), 0);
    std::vector<Vertex> stack{a};
    seen[a] = 1;
    while (!stack.empty() && !seen[b]) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (auto [w, e] : adj_[f][v]) {
        if (seen[w]) continue;
        seen[w] = 1;
        via[w] = e;
        stack.push_back(w);
      }
    }
    std::vector<EdgeId> out;
    if (!seen[b]) return out;
    for (Vertex v = b; v != a; v = g_.edge(via[v]).other(v)) out.push_back(via[v]);
    return out;
  }

 private:
  const Graph& g_;
  std::vector<int> owner_;
  std::vector<std::vector<std::vector<Incidence>>> adj_;
  std::vector<int> sizes_;
};

bool insert_edge(const Graph& g, Forests& forests, EdgeId start) {
  std::vector<EdgeId> prev(g.num_edges(), -2);
  std::queue<EdgeId> q;
  prev[start] = -1;
  q.push(start);
  while (!q.empty()) {
    const EdgeId cur = q.front();
    q.pop();
    const Edge& ed = g.edge(cur);
    for (int f = 0; f < forests.count(); ++f) {
      if (forests.owner(cur) == f) continue;
      const auto cycle = forests.path(f, ed.u, ed.v);
      if (cycle.empty()) {
        // cur joins forest f; each predecessor takes the slot its
        // successor vacates.
        EdgeId x = cur;
        int target = f;
        while (true) {
          const int old = forests.owner(x);
          forests.move(x, target);
          if (prev[x] < 0) break;
          target = old;
          x = prev[x];
        }
        return true;
      }
      for (EdgeId e : cycle) {
        if (prev[e] != -2) continue;
        prev[e] = cur;
        q.push(e);
      }
    }
  }
  return false;
}

}  // namespace

TreePacking spanning_tree_packing(const Graph& g, int k) {
  if (k < 1) throw Error(Errc::OutOfRange, "k must be >= 1");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "spanning_tree_packing");
  const int n = g.num_vertices();
  Forests forests(g, k);
  auto all_span = [&] {
    for (int f = 0; f < k; ++f)
      if (forests.size(f) != n - 1) return false;
    return true;
  };
  for (EdgeId e = 0; e < g.num_edges() && !all_span(); ++e) insert_edge(g, forests, e);

  TreePacking out;
  out.complete = all_span();
  out.trees.assign(k, EdgeSet(g.num_edges()));
  out.leftover = EdgeSet(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (forests.owner(e) >= 0)
      out.trees[forests.owner(e)].set(e);
    else
      out.leftover.set(e);
  }
  return out;
}

PackingResult packing_partitions(const Graph& g, int k) {
  if (k < 2) throw Error(Errc::OutOfRange, "k must be >= 2");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "packing_partitions");
  PackingResult res;
  auto& rep = res.report;
  const CoreSubgraph core = dense_core(g);
  const Subgraph h = induced_subgraph(g, core.vertices);
  rep.core_vertices = h.graph.num_vertices();
  rep.core_edges = h.graph.num_edges();
  const TreePacking pack = spanning_tree_packing(h.graph, k);
  if (!pack.complete)
    throw Error(Errc::PackingInfeasible,
                "no " + std::to_string(k) + " edge-disjoint spanning trees in the core (" +
                    std::to_string(rep.core_vertices) + " vertices, " +
                    std::to_string(rep.core_edges) + " edges)");

  const int m = g.num_edges();
  auto to_host = [&](const EdgeSet& local) {
    EdgeSet out(m);
    local.for_each([&](int e) { out.set(h.host_edge[e]); });
    return out;
  };
  std::vector<EdgeSet> trees;
  for (const EdgeSet& t : pack.trees) trees.push_back(to_host(t));
  std::vector<EdgeId> leftover;
  pack.leftover.for_each([&](int e) { leftover.push_back(h.host_edge[e]); });
  std::sort(leftover.begin(), leftover.end());
  EdgeSet outside = g.all_edges() - to_host(h.graph.all_edges());
  rep.leftover = static_cast<int>(leftover.size());
  rep.outside_edges = outside.count();

  const BigInt total = count_partitions(rep.leftover, k, true);
  if (total > 2'000'000) throw Error(Errc::TooLarge, "more than 2e6 leftover distributions");

  // Nondecreasing block sizes a_1 <= ... <= a_k summing to |leftover|.
  std::vector<int> blocks(k, 0);
  auto emit = [&] {
    EdgePartition p;
    int next = 0;
    for (int i = 0; i < k; ++i) {
      EdgeSet part = trees[i];
      for (int j = 0; j < blocks[i]; ++j) part.set(leftover[next++]);
      if (i == k - 1) part |= outside;
      p.parts.push_back(std::move(part));
    }
    res.partitions.push_back(std::move(p));
  };
  auto rec = [&](auto& self, int i, int lo, int left) -> void {
    if (i == k - 1) {
      blocks[i] = left;
      emit();
      return;
    }
    for (int a = lo; a * (k - i) <= left; ++a) {
      blocks[i] = a;
      self(self, i + 1, a, left - a);
    }
  };
  rec(rec, 0, 0, rep.leftover);
  rep.emitted = static_cast<std::int64_t>(res.partitions.size());
  return res;
}

namespace {

// Adds every component of G - (parts) to the lowest-index part it touches.
VertexPartition attach_leftovers(const Graph& g, std::vector<VertexSet> parts) {
  const int n = g.num_vertices();
  VertexSet used(n);
  for (const auto& p : parts) used |= p;
  std::vector<int> label(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i)
    parts[i].for_each([&](int v) { label[v] = static_cast<int>(i); });
  for (const VertexSet& comp : components(g, used)) {
    int target = -1;
    comp.for_each([&](int v) {
      for (auto [w, e] : g.incident(v))
        if (label[w] >= 0 && (target < 0 || label[w] < target)) target = label[w];
    });
    if (target < 0) throw Error(Errc::Disconnected, "component touches no part");
    parts[target] |= comp;
  }
  return VertexPartition{std::move(parts)};
}

// Parts of `sizes[i]` vertices grown breadth-first inside h, all but the
// last from seeds tried in id order; accepted when the rest stays
// connected.
std::optional<VertexPartition> grow_regions(const Graph& h, const std::vector<int>& sizes) {
  const int n = h.num_vertices();
  VertexSet free = h.all_vertices();
  VertexPartition out;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) {
    bool placed = false;
    for (int seed = free.first(); seed >= 0 && !placed; ++seed) {
      if (seed >= n) break;
      if (!free.test(seed)) continue;
      VertexSet part(n);
      std::queue<Vertex> q;
      q.push(seed);
      part.set(seed);
      int have = 1;
      while (!q.empty() && have < sizes[i]) {
        const Vertex v = q.front();
        q.pop();
        for (auto [w, e] : h.incident(v)) {
          if (have == sizes[i]) break;
          if (!free.test(w) || part.test(w)) continue;
          part.set(w);
          ++have;
          q.push(w);
        }
      }
      if (have != sizes[i]) continue;
      const VertexSet rest = free - part;
      if (rest.none() || !is_connected_vertex_set(h, rest)) continue;
      free = rest;
      out.parts.push_back(std::move(part));
      placed = true;
    }
    if (!placed) return std::nullopt;
  }
  out.parts.push_back(free);
  return out;
}

}  // namespace

CutBoundResult connected_cut_bound(const Graph& g, int r) {
  if (r < 2) throw Error(Errc::OutOfRange, "r must be >= 2");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "connected_cut_bound");
  const int n = g.num_vertices();
  if (n < r) throw Error(Errc::TooSmall, "fewer vertices than parts");
  CutBoundResult res;
  auto& rep = res.report;
  const CoreSubgraph core = dense_core(g);
  const Subgraph h = induced_subgraph(g, core.vertices);
  rep.core_vertices = h.graph.num_vertices();
  rep.core_min_degree = core.min_degree;

  std::vector<VertexSet> local_parts;
  if (r == 2) {
    const auto bl = blocks(h.graph);
    const VertexSet& block = *std::max_element(
        bl.begin(), bl.end(),
        [](const VertexSet& a, const VertexSet& b) { return a.count() < b.count(); });
    if (block.count() < 2) throw Error(Errc::ConstructionFailed, "core has no edge");
    const Subgraph b = induced_subgraph(h.graph, block);
    const int size_b = b.graph.num_vertices();
    const int first = std::max(1, std::min((core.min_degree + 1) / 2, size_b - 1));
    const auto order = st_numbering(b.graph, 0, b.graph.incident(0).front().neighbor);
    local_parts.assign(2, VertexSet(h.graph.num_vertices()));
    for (int i = 0; i < size_b; ++i) local_parts[i < first ? 0 : 1].set(b.host_vertex[order[i]]);
    rep.method = "st-numbering";
  } else {
    const int s = std::max(1, core.min_degree / (2 * r));
    std::vector<int> sizes(r, s);
    sizes.back() = h.graph.num_vertices() - (r - 1) * s;
    if (sizes.back() < 1)
      throw Error(Errc::ConstructionFailed, "core too small for " + std::to_string(r) + " parts");
    std::optional<VertexPartition> found;
    if (h.graph.num_vertices() <= 16) {
      found = gyori_lovasz(h.graph, sizes);
      rep.method = "exhaustive";
    } else {
      found = grow_regions(h.graph, sizes);
      rep.method = "region-growing";
    }
    if (!found) throw Error(Errc::ConstructionFailed, "no connected core partition");
    local_parts = found->parts;
  }
  std::vector<VertexSet> parts;
  for (const VertexSet& lp : local_parts) {
    rep.core_sizes.push_back(lp.count());
    VertexSet host(n);
    lp.for_each([&](int v) { host.set(h.host_vertex[v]); });
    parts.push_back(std::move(host));
  }
  res.witness.partition = attach_leftovers(g, std::move(parts));
  if (auto why = check_vertex_partition(g, res.witness.partition))
    throw Error(Errc::ConstructionFailed, *why);
  res.witness.cut_size = cut_size(g, res.witness.partition);
  return res;
}

OrderedPartitionResult ordered_vertex_partitions(const Graph& g, int k) {
  if (k < 2) throw Error(Errc::OutOfRange, "k must be >= 2");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "ordered_vertex_partitions");
  const int n = g.num_vertices();
  OrderedPartitionResult res;
  auto& rep = res.report;
  const CoreSubgraph core = dense_core(g);
  const auto path = long_path(g, core.vertices);
  const int len = static_cast<int>(path.size());
  if (len < k - 1) return res;
  const int base = len / (k - 1);
  std::vector<int> seg_start;
  for (int i = 0; i < k - 1; ++i) {
    seg_start.push_back(i * base);
    rep.segment_lengths.push_back(i + 1 < k - 1 ? base : len - base * (k - 2));
  }

  const auto outside = components(g, core.vertices);
  std::vector<VertexSet> outside_nbrs;
  for (const VertexSet& c : outside) {
    VertexSet nb(n);
    c.for_each([&](int v) {
      for (auto [w, e] : g.incident(v)) nb.set(w);
    });
    outside_nbrs.push_back(nb - c);
  }

  std::set<SizeTuple> seen;
  std::vector<int> a(k - 1, 1);
  while (true) {
    ++rep.attempted;
    std::vector<VertexSet> parts(k, VertexSet(n));
    VertexSet rest = core.vertices;
    for (int i = 0; i < k - 1; ++i)
      for (int j = 0; j < a[i]; ++j) {
        parts[i].set(path[seg_start[i] + j]);
        rest.reset(path[seg_start[i] + j]);
      }
    if (rest.any() && is_connected_vertex_set(g, rest)) {
      parts[k - 1] = rest;
      const std::vector<VertexSet> cores = parts;
      for (std::size_t c = 0; c < outside.size(); ++c) {
        for (int j = 0; j < k; ++j)
          if (outside_nbrs[c].intersects(cores[j])) {
            parts[j] |= outside[c];
            break;
          }
      }
      VertexPartition p{std::move(parts)};
      ++rep.succeeded;
      if (!seen.insert(p.sizes()).second) rep.distinct_sizes = false;
      res.partitions.push_back(std::move(p));
    }
    int i = 0;
    while (i < k - 1 && a[i] == rep.segment_lengths[i]) a[i++] = 1;
    if (i == k - 1) break;
    ++a[i];
  }
  return res;
}

}  // namespace partctl
