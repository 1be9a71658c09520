#include "partctl/splits.hpp"

#include <algorithm>
#include <queue>

namespace partctl {

namespace {

void require_tree(const Graph& tree) {
  if (tree.num_vertices() == 0) throw Error(Errc::OutOfRange, "empty tree");
  if (tree.num_edges() != tree.num_vertices() - 1)
    throw Error(Errc::OutOfRange, "not a tree: m != n-1");
  if (!is_connected(tree)) throw Error(Errc::Disconnected, "not a tree");
}

struct RootedSizes {
  std::vector<Vertex> parent;
  std::vector<int> size;  // vertices in the subtree below (and including) v
};

RootedSizes subtree_sizes(const Graph& tree, Vertex root) {
  const int n = tree.num_vertices();
  RootedSizes rs{std::vector<Vertex>(n, -1), std::vector<int>(n, 1)};
  std::vector<Vertex> order{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto [w, e] : tree.incident(order[i]))
      if (!seen[w]) {
        seen[w] = 1;
        rs.parent[w] = order[i];
        order.push_back(w);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (rs.parent[*it] >= 0) rs.size[rs.parent[*it]] += rs.size[*it];
  return rs;
}

// Components of tree - v, largest first (ties: smallest minimum vertex).
std::vector<VertexSet> components_by_size(const Graph& tree, Vertex v) {
  VertexSet removed(tree.num_vertices());
  removed.set(v);
  auto comps = components(tree, removed);
  std::stable_sort(comps.begin(), comps.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.count() > b.count(); });
  return comps;
}

// Emits (E(tree[A]), E(tree[B ∪ ext])) for every split with both sides
// nonempty.
std::vector<EdgePartition> partitions_from_sequence(const Graph& tree, const SplitSequence& seq,
                                                    const VertexSet& ext) {
  std::vector<EdgePartition> out;
  for (const Split& s : seq.items) {
    EdgeSet first = induced_edges(tree, s.a);
    EdgeSet second = induced_edges(tree, s.b | ext);
    if (first.none() || second.none()) continue;
    out.push_back({{std::move(first), std::move(second)}});
  }
  return out;
}

// Words-backed bitset with the one operation the subset-sum DP needs.
class SumSet {
 public:
  explicit SumSet(int max_sum) : bits_(max_sum + 1), words_((max_sum + 64) / 64, 0) {
    words_[0] = 1;
  }
  void add_item(int w) {
    const int ws = w / 64, bs = w % 64;
    for (int i = static_cast<int>(words_.size()) - 1; i >= ws; --i) {
      std::uint64_t moved = words_[i - ws] << bs;
      if (bs && i - ws - 1 >= 0) moved |= words_[i - ws - 1] >> (64 - bs);
      words_[i] |= moved;
    }
  }
  bool test(int s) const { return (words_[s / 64] >> (s % 64)) & 1u; }
  int bits() const { return bits_; }

 private:
  int bits_;
  std::vector<std::uint64_t> words_;
};

}  // namespace

SplitSequence nested_split_sequence_within(const Graph& tree, const VertexSet& within,
                                           Vertex root) {
  if (root < 0 || root >= tree.num_vertices() || !within.test(root))
    throw Error(Errc::OutOfRange, "root outside the subtree");
  SplitSequence seq;
  VertexSet region = within;
  VertexSet outside(tree.num_vertices());
  Vertex v = root;
  while (true) {
    VertexSet rest = region;
    rest.reset(v);
    auto comps = components_within(tree, rest);
    if (comps.empty()) {
      VertexSet a(tree.num_vertices());
      a.set(v);
      seq.items.push_back({std::move(a), within, v});
      break;
    }
    // components_within orders by smallest vertex; move the first largest
    // one to the back.
    auto largest = std::max_element(
        comps.begin(), comps.end(),
        [](const VertexSet& x, const VertexSet& y) { return x.count() < y.count(); });
    std::rotate(largest, largest + 1, comps.end());

    VertexSet a = region;
    VertexSet b = outside;
    b.set(v);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      seq.items.push_back({a, b, v});
      a -= comps[i];
      b |= comps[i];
    }
    const VertexSet& next = comps.back();
    Vertex next_root = -1;
    for (auto [w, e] : tree.incident(v))
      if (next.test(w)) next_root = w;
    outside = within - next;
    region = next;
    v = next_root;
  }
  return seq;
}

SplitSequence nested_split_sequence(const RootedTree& t) {
  require_tree(t.graph);
  return nested_split_sequence_within(t.graph, t.graph.all_vertices(), t.root);
}

std::optional<std::string> check_split_sequence(const Graph& tree, const SplitSequence& seq,
                                                Vertex root, const TTable* table) {
  const auto& items = seq.items;
  if (items.empty()) return "empty sequence";
  if (items.front().pivot != root) return "v_1 is not the root";
  const VertexSet all = tree.all_vertices();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Split& s = items[i];
    const std::string at = "item " + std::to_string(i) + ": ";
    VertexSet meet = s.a & s.b;
    if (meet.count() != 1 || !meet.test(s.pivot)) return at + "A ∩ B != {v}";
    if ((s.a | s.b) != all) return at + "A ∪ B != V";
    if (!is_connected_vertex_set(tree, s.a)) return at + "T[A] disconnected";
    if (!is_connected_vertex_set(tree, s.b)) return at + "T[B] disconnected";
    if (i > 0) {
      const Split& prev = items[i - 1];
      if (!s.a.is_subset_of(prev.a) || s.a == prev.a) return at + "A not strictly shrinking";
      if (!prev.b.is_subset_of(s.b) || s.b == prev.b) return at + "B not strictly growing";
    }
    for (std::size_t j = 0; j < i; ++j)
      if (!s.b.test(items[j].pivot)) return at + "earlier pivot missing from B";
  }
  if (table) {
    const int need = table->value(tree.num_vertices()) + 1;
    if (seq.length() < need)
      return "length " + std::to_string(seq.length()) + " < t(n)+1 = " + std::to_string(need);
  }
  return std::nullopt;
}

std::vector<EdgePartition> two_partitions_from_splits(const Graph& g, const RootedTree& t) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "two_partitions_from_splits");
  if (t.num_vertices() != g.num_vertices())
    throw Error(Errc::OutOfRange, "tree does not span the graph");
  const SplitSequence seq = nested_split_sequence(t);
  const EdgeSet all = g.all_edges();
  std::vector<EdgePartition> out;
  for (const Split& s : seq.items) {
    EdgeSet second = induced_edges(g, s.b);
    EdgeSet first = all - second;
    if (first.none() || second.none()) continue;
    out.push_back({{std::move(first), std::move(second)}});
  }
  return out;
}

Vertex centroid(const Graph& tree) {
  require_tree(tree);
  const int n = tree.num_vertices();
  const RootedSizes rs = subtree_sizes(tree, 0);
  Vertex best = 0;
  int best_max = n + 1;
  for (Vertex v = 0; v < n; ++v) {
    int worst = n - rs.size[v];
    for (auto [w, e] : tree.incident(v))
      if (rs.parent[w] == v) worst = std::max(worst, rs.size[w]);
    if (worst < best_max) {
      best_max = worst;
      best = v;
    }
  }
  return best;
}

std::vector<EdgePartition> recursive_k_partitions(const Graph& g, int k) {
  if (k < 2) throw Error(Errc::OutOfRange, "k must be >= 2");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "recursive_k_partitions");
  if (g.num_edges() < k) throw Error(Errc::TooSmall, "fewer than k edges");
  const RootedTree t = spanning_tree(g, 0);
  if (k == 2) return two_partitions_from_splits(g, t);

  const int n = g.num_vertices();
  const Vertex c = centroid(t.graph);
  const auto comps = components_by_size(t.graph, c);

  // Largest-first prefix reaching (n-1)/3, then the lighter of prefix and
  // suffix becomes A_1 (so |A_1| <= n/2).
  std::size_t j = 0;
  int prefix = 0;
  while (j < comps.size() && 3 * prefix < n - 1) prefix += comps[j++].count();
  const bool take_prefix = prefix <= (n - 1) - prefix;
  VertexSet a1(n);
  a1.set(c);
  for (std::size_t i = 0; i < comps.size(); ++i)
    if ((i < j) == take_prefix) a1 |= comps[i];
  const VertexSet rest = g.all_vertices() - a1;

  const SplitSequence seq = nested_split_sequence_within(t.graph, a1, c);
  const EdgeSet all = g.all_edges();
  std::vector<EdgePartition> out;
  for (const Split& s : seq.items) {
    const VertexSet b = s.b | rest;
    EdgeSet second = induced_edges(g, b);
    EdgeSet first = all - second;
    if (first.none() || second.count() < k - 1) continue;
    const Subgraph sub = induced_subgraph(g, b);
    for (const EdgePartition& inner : recursive_k_partitions(sub.graph, k - 1)) {
      EdgePartition p;
      p.parts.push_back(first);
      for (const EdgeSet& part : inner.parts) {
        EdgeSet mapped(g.num_edges());
        part.for_each([&](int e) { mapped.set(sub.host_edge[e]); });
        p.parts.push_back(std::move(mapped));
      }
      out.push_back(std::move(p));
    }
  }
  return out;
}

SizeProfile tree_exact_P2(const Graph& tree) {
  require_tree(tree);
  const int n = tree.num_vertices();
  const int m = n - 1;
  SizeProfile out;
  if (m < 2) return out;
  const RootedSizes rs = subtree_sizes(tree, 0);
  std::vector<char> seen(m / 2 + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (tree.degree(v) < 2) continue;
    // A branch at v holds the edge to a neighbor plus everything behind it:
    // as many edges as the neighbor's component has vertices.
    SumSet sums(m);
    for (auto [w, e] : tree.incident(v))
      sums.add_item(rs.parent[w] == v ? rs.size[w] : n - rs.size[v]);
    for (int s = 1; s <= m / 2; ++s)
      if (!seen[s] && sums.test(s)) seen[s] = 1;
  }
  for (int s = 1; s <= m / 2; ++s)
    if (seen[s]) out.insert({m - s, s});
  return out;
}

std::vector<EdgePartition> tree_lower_bound_partitions(const Graph& tree) {
  require_tree(tree);
  const int n = tree.num_vertices();
  if (n < 3) return {};
  const RootedSizes rs = subtree_sizes(tree, 0);

  // Case I: an edge whose removal leaves two halves of equal size.
  if (n % 2 == 0) {
    for (Vertex c = 0; c < n; ++c) {
      if (rs.parent[c] < 0 || 2 * rs.size[c] != n) continue;
      const Vertex p = rs.parent[c];
      const Vertex u = std::min(p, c);
      VertexSet removed(n);
      removed.set(c == u ? p : c);
      VertexSet side_u;
      for (auto& comp : components(tree, removed))
        if (comp.test(u)) side_u = comp;
      const SplitSequence seq = nested_split_sequence_within(tree, side_u, u);
      return partitions_from_sequence(tree, seq, tree.all_vertices() - side_u);
    }
  }

  // Case II: orienting every edge toward its larger side leaves one sink,
  // the centroid, and every component around it has at most (n-1)/2
  // vertices.
  const Vertex v = centroid(tree);
  const auto comps = components_by_size(tree, v);
  VertexSet inner(n);
  inner.set(v);
  if (3 * comps.front().count() >= n - 1) {
    inner |= comps.front();
  } else {
    std::size_t j = 0;
    int prefix = 0;
    while (j < comps.size() && 3 * prefix < n - 1) prefix += comps[j++].count();
    const int prefix_count = 1 + prefix;
    const int suffix_count = n - prefix;
    const int lo = (n - 1 + 2) / 3;
    auto fits = [&](int cnt) { return cnt >= lo && 2 * cnt <= n; };
    bool take_prefix = prefix_count <= suffix_count;
    if (fits(prefix_count))
      take_prefix = true;
    else if (fits(suffix_count))
      take_prefix = false;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if ((i < j) == take_prefix) inner |= comps[i];
  }
  const SplitSequence seq = nested_split_sequence_within(tree, inner, v);
  return partitions_from_sequence(tree, seq, tree.all_vertices() - inner);
}

}  // namespace partctl
