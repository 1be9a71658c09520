#include "partctl/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <unordered_map>

namespace partctl {

int ExactBudget::edge_limit(int k) const {
  auto it = max_edges.find(k);
  return it == max_edges.end() ? default_max_edges : it->second;
}

int ExactBudget::vertex_limit(int k) const {
  auto it = max_vertices.find(k);
  return it == max_vertices.end() ? default_max_vertices : it->second;
}

ExactBudget ExactBudget::unbounded_sizes() {
  ExactBudget b;
  b.max_edges.clear();
  b.max_vertices.clear();
  b.default_max_edges = 64;
  b.default_max_vertices = 64;
  return b;
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }
int lowest(Mask m) { return std::countr_zero(m); }
int popcount(Mask m) { return std::popcount(m); }

// Up to 64 elements with adjacency masks: the vertices of a graph, or its
// edges under line-graph adjacency.
struct MaskGraph {
  std::vector<Mask> adj;

  // Elements of `within` reachable from `seeds`.
  Mask flood(Mask within, Mask seeds) const {
    Mask reached = seeds & within, frontier = reached;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[lowest(f)];
      next &= within & ~reached;
      reached |= next;
      frontier = next;
    }
    return reached;
  }

  bool connected(Mask set) const { return set && flood(set, set & -set) == set; }

  int components(Mask set) const {
    int c = 0;
    while (set) {
      set &= ~flood(set, set & -set);
      ++c;
    }
    return c;
  }
};

MaskGraph vertex_mask_graph(const Graph& g) {
  MaskGraph mg{std::vector<Mask>(g.num_vertices(), 0)};
  for (const Edge& e : g.edges()) {
    mg.adj[e.u] |= bit(e.v);
    mg.adj[e.v] |= bit(e.u);
  }
  return mg;
}

MaskGraph edge_mask_graph(const Graph& g) {
  MaskGraph mg{std::vector<Mask>(g.num_edges(), 0)};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Mask at = 0;
    for (auto [w, e] : g.incident(v)) at |= bit(e);
    for (auto [w, e] : g.incident(v)) mg.adj[e] |= at & ~bit(e);
  }
  return mg;
}

Bitset to_bitset(Mask m, int size) {
  Bitset b(size);
  for (; m; m &= m - 1) b.set(lowest(m));
  return b;
}

struct NodeCounter {
  std::uint64_t nodes = 0;
  std::uint64_t limit = 0;

  void tick() {
    if (++nodes > limit)
      throw Error(Errc::TooLarge, "search exceeded " + std::to_string(limit) + " nodes");
  }
};

// Visits every connected S ⊆ allowed containing `anchor` exactly once:
// each child adds the lowest remaining candidate, and later siblings
// exclude it. keep(S, X) sees the current set and the excluded elements;
// returning false drops S and all of its extensions under X. visit(S)
// returning false stops the whole search. Returns false when stopped.
template <class Keep, class Visit>
class ConnectedSets {
 public:
  ConnectedSets(const MaskGraph& g, Mask allowed, NodeCounter& counter, Keep& keep, Visit& visit)
      : g_(g), allowed_(allowed), counter_(counter), keep_(keep), visit_(visit) {}

  bool run(int anchor) {
    const Mask s = bit(anchor);
    return rec(s, 0, g_.adj[anchor] & allowed_ & ~s);
  }

 private:
  bool rec(Mask s, Mask excluded, Mask cand) {
    counter_.tick();
    if (!keep_(s, excluded)) return true;
    if (!visit_(s)) return false;
    for (Mask c = cand; c;) {
      const int e = lowest(c);
      c &= c - 1;
      const Mask s2 = s | bit(e);
      if (!rec(s2, excluded, (c | g_.adj[e]) & allowed_ & ~s2 & ~excluded)) return false;
      excluded |= bit(e);
    }
    return true;
  }

  const MaskGraph& g_;
  Mask allowed_;
  NodeCounter& counter_;
  Keep& keep_;
  Visit& visit_;
};

template <class Keep, class Visit>
bool for_each_connected(const MaskGraph& g, Mask allowed, int anchor, NodeCounter& counter,
                        Keep keep, Visit visit) {
  ConnectedSets<Keep, Visit> search(g, allowed, counter, keep, visit);
  return search.run(anchor);
}

// Pruning shared by the searches that split `region` into S plus at most
// `parts_left` connected parts: everything excluded from S stays in the
// remainder, so the excluded elements may touch at most parts_left
// components of region - S. When they touch exactly that many, all other
// remainder components must still join S. Returns the smallest final |S|,
// or -1 when S cannot be completed.
int min_final_size(const MaskGraph& g, Mask region, Mask s, Mask excluded, int parts_left) {
  if (!excluded) return popcount(s);
  const Mask rest = region & ~s;
  Mask hit = 0;
  int touched = 0;
  for (Mask x = excluded; x; x &= ~hit) {
    hit |= g.flood(rest, x & -x);
    if (++touched > parts_left) return -1;
  }
  return touched == parts_left ? popcount(s) + popcount(rest & ~hit) : popcount(s);
}

using Witness = std::vector<Mask>;  // parts in order
using ProfileMap = std::map<SizeTuple, Witness, std::greater<SizeTuple>>;

// Exhaustive profile of `region` split into connected parts.
class ProfileSolver {
 public:
  ProfileSolver(const MaskGraph& g, NodeCounter& counter) : g_(g), counter_(counter) {}

  const ProfileMap& solve(Mask region, int parts) {
    auto& memo = memo_[parts];
    if (auto it = memo.find(region); it != memo.end()) return it->second;
    ProfileMap out;
    const int size = popcount(region);
    if (parts == 1) {
      if (g_.connected(region)) out.emplace(SizeTuple{size}, Witness{region});
    } else if (parts == 2) {
      solve_two(region, out);
    } else if (size >= parts) {
      solve_many(region, parts, out);
    }
    return memo.emplace(region, std::move(out)).first->second;
  }

 private:
  // Two parts: S holds the lowest element; search only for sizes whose
  // unordered pair is still missing, and stop once none is.
  void solve_two(Mask region, ProfileMap& out) {
    const int total = popcount(region);
    if (total < 2) return;
    Mask wanted = 0;
    for (int s = 1; s < total; ++s) wanted |= bit(s);
    auto keep = [&](Mask s, Mask excluded) {
      const int lo = min_final_size(g_, region, s, excluded, 1);
      if (lo < 0) return false;
      const int hi = total - std::max(1, popcount(excluded));
      if (lo > hi) return false;
      const Mask window = (hi >= 63 ? ~Mask{0} : (bit(hi + 1) - 1)) & ~(bit(lo) - 1);
      return (wanted & window) != 0;
    };
    auto visit = [&](Mask s) {
      const int a = popcount(s);
      if (!(wanted & bit(a))) return true;
      const Mask rest = region & ~s;
      if (!g_.connected(rest)) return true;
      out.emplace(canonical({a, total - a}), Witness{s, rest});
      wanted &= ~bit(a) & ~bit(total - a);
      return wanted != 0;
    };
    for_each_connected(g_, region, lowest(region), counter_, keep, visit);
  }

  void solve_many(Mask region, int parts, ProfileMap& out) {
    const int total = popcount(region);
    auto keep = [&](Mask s, Mask excluded) {
      const int lo = min_final_size(g_, region, s, excluded, parts - 1);
      return lo >= 0 && lo <= total - (parts - 1);
    };
    auto visit = [&](Mask s) {
      const Mask rest = region & ~s;
      if (popcount(rest) < parts - 1 || g_.components(rest) > parts - 1) return true;
      const int a = popcount(s);
      for (const auto& [tuple, witness] : solve(rest, parts - 1)) {
        SizeTuple t = tuple;
        t.push_back(a);
        t = canonical(std::move(t));
        if (out.count(t)) continue;
        Witness w{s};
        w.insert(w.end(), witness.begin(), witness.end());
        out.emplace(std::move(t), std::move(w));
      }
      return true;
    };
    for_each_connected(g_, region, lowest(region), counter_, keep, visit);
  }

  const MaskGraph& g_;
  NodeCounter& counter_;
  std::unordered_map<int, std::unordered_map<Mask, ProfileMap>> memo_;
};

Mask full_mask(int size) { return size >= 64 ? ~Mask{0} : bit(size) - 1; }

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, what);
}

}  // namespace

EdgeProfileResult edge_partition_profile(const Graph& g, int k, const ExactBudget& budget) {
  if (k < 1) throw Error(Errc::OutOfRange, "k must be >= 1");
  require_connected(g, "edge_partition_profile");
  const int m = g.num_edges();
  if (m > std::min(64, budget.edge_limit(k)))
    throw Error(Errc::TooLarge, std::to_string(m) + " edges exceeds the limit " +
                                    std::to_string(std::min(64, budget.edge_limit(k))) +
                                    " for k=" + std::to_string(k));
  EdgeProfileResult res;
  if (m < k) {
    res.fewer_edges_than_parts = true;
    return res;
  }
  const MaskGraph mg = edge_mask_graph(g);
  NodeCounter counter{0, budget.max_nodes};
  ProfileSolver solver(mg, counter);
  for (const auto& [tuple, witness] : solver.solve(full_mask(m), k)) {
    res.profile.insert(tuple);
    EdgePartition p;
    for (Mask part : witness) p.parts.push_back(to_bitset(part, m));
    res.witnesses.emplace(tuple, std::move(p));
  }
  res.nodes = counter.nodes;
  return res;
}

VertexProfileResult vertex_partition_profile(const Graph& g, int k, const ExactBudget& budget) {
  if (k < 1) throw Error(Errc::OutOfRange, "k must be >= 1");
  require_connected(g, "vertex_partition_profile");
  const int n = g.num_vertices();
  if (n > std::min(64, budget.vertex_limit(k)))
    throw Error(Errc::TooLarge, std::to_string(n) + " vertices exceeds the limit " +
                                    std::to_string(std::min(64, budget.vertex_limit(k))) +
                                    " for k=" + std::to_string(k));
  VertexProfileResult res;
  if (n < k) {
    res.fewer_vertices_than_parts = true;
    return res;
  }
  const MaskGraph mg = vertex_mask_graph(g);
  NodeCounter counter{0, budget.max_nodes};
  ProfileSolver solver(mg, counter);
  for (const auto& [tuple, witness] : solver.solve(full_mask(n), k)) {
    res.profile.insert(tuple);
    VertexPartition p;
    for (Mask part : witness) p.parts.push_back(to_bitset(part, n));
    res.witnesses.emplace(tuple, std::move(p));
  }
  res.nodes = counter.nodes;
  return res;
}

namespace {

class CutSolver {
 public:
  CutSolver(const MaskGraph& g, NodeCounter& counter) : g_(g), counter_(counter) {}

  struct Best {
    int cut = -1;  // -1: no valid split
    Witness parts;
  };

  const Best& solve(Mask region, int parts) {
    auto& memo = memo_[parts];
    if (auto it = memo.find(region); it != memo.end()) return it->second;
    Best best;
    if (parts == 1) {
      if (g_.connected(region)) best = {0, {region}};
    } else if (popcount(region) >= parts) {
      const int total = popcount(region);
      auto keep = [&](Mask s, Mask excluded) {
        const int lo = min_final_size(g_, region, s, excluded, parts - 1);
        return lo >= 0 && lo <= total - (parts - 1);
      };
      auto visit = [&](Mask s) {
        const Mask rest = region & ~s;
        if (popcount(rest) < parts - 1 || g_.components(rest) > parts - 1) return true;
        const Best& sub = solve(rest, parts - 1);
        if (sub.cut < 0) return true;
        int cross = 0;
        for (Mask x = s; x; x &= x - 1) cross += popcount(g_.adj[lowest(x)] & rest);
        if (cross + sub.cut > best.cut) {
          best.cut = cross + sub.cut;
          best.parts = {s};
          best.parts.insert(best.parts.end(), sub.parts.begin(), sub.parts.end());
        }
        return true;
      };
      for_each_connected(g_, region, lowest(region), counter_, keep, visit);
    }
    return memo.emplace(region, std::move(best)).first->second;
  }

 private:
  const MaskGraph& g_;
  NodeCounter& counter_;
  std::unordered_map<int, std::unordered_map<Mask, Best>> memo_;
};

}  // namespace

CutWitness cmc(const Graph& g, int r, const ExactBudget& budget) {
  if (r < 2) throw Error(Errc::OutOfRange, "r must be >= 2");
  require_connected(g, "cmc");
  const int n = g.num_vertices();
  if (n > std::min(64, budget.vertex_limit(r)))
    throw Error(Errc::TooLarge, std::to_string(n) + " vertices exceeds the limit for r=" +
                                    std::to_string(r));
  if (n < r) throw Error(Errc::TooSmall, "fewer vertices than parts");
  const MaskGraph mg = vertex_mask_graph(g);
  NodeCounter counter{0, budget.max_nodes};
  CutSolver solver(mg, counter);
  const auto& best = solver.solve(full_mask(n), r);
  if (best.cut < 0) throw Error(Errc::TooSmall, "no connected partition into r parts");
  CutWitness w;
  for (Mask part : best.parts) w.partition.parts.push_back(to_bitset(part, n));
  w.cut_size = cut_size(g, w.partition);
  return w;
}

std::optional<VertexPartition> gyori_lovasz(const Graph& g, std::span<const int> sizes,
                                            const ExactBudget& budget) {
  const int n = g.num_vertices();
  long long sum = 0;
  for (int s : sizes) {
    if (s < 1) throw Error(Errc::SizeMismatch, "part sizes must be positive");
    sum += s;
  }
  if (sizes.empty() || sum != n)
    throw Error(Errc::SizeMismatch, "sizes sum to " + std::to_string(sum) + ", n=" +
                                        std::to_string(n));
  const int k = static_cast<int>(sizes.size());

  if (k == 2 && is_biconnected(g)) {
    const Vertex s = 0;
    const Vertex t = g.incident(s).front().neighbor;
    const auto order = st_numbering(g, s, t);
    VertexPartition p{{VertexSet(n), VertexSet(n)}};
    for (int i = 0; i < n; ++i) p.parts[i < sizes[0] ? 0 : 1].set(order[i]);
    return p;
  }
  if (n > 16) throw Error(Errc::TooLarge, "exhaustive search is limited to 16 vertices");

  const MaskGraph mg = vertex_mask_graph(g);
  NodeCounter counter{0, budget.max_nodes};
  std::vector<Mask> assigned(k, 0);

  // Places the lowest unassigned vertex into some unfilled part, trying
  // each distinct size once.
  auto search = [&](auto& self, Mask region, int left) -> bool {
    if (left == 0) return region == 0;
    const int anchor = lowest(region);
    std::vector<int> tried;
    for (int j = 0; j < k; ++j) {
      if (assigned[j]) continue;
      const int want = sizes[j];
      if (std::find(tried.begin(), tried.end(), want) != tried.end()) continue;
      tried.push_back(want);
      auto keep = [&](Mask s, Mask excluded) {
        if (popcount(s) > want) return false;
        const int lo = min_final_size(mg, region, s, excluded, left - 1);
        return lo >= 0 && lo <= want;
      };
      auto visit = [&](Mask s) {
        if (popcount(s) != want) return true;
        const Mask rest = region & ~s;
        if (left > 1 && mg.components(rest) > left - 1) return true;
        assigned[j] = s;
        if (self(self, rest, left - 1)) return false;
        assigned[j] = 0;
        return true;
      };
      if (!for_each_connected(mg, region, anchor, counter, keep, visit)) return true;
    }
    return false;
  };
  if (!search(search, full_mask(n), k)) return std::nullopt;
  VertexPartition p;
  for (Mask part : assigned) p.parts.push_back(to_bitset(part, n));
  return p;
}

}  // namespace partctl
