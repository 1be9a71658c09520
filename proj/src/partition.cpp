#include "partctl/partition.hpp"

#include <algorithm>

namespace partctl {

SizeTuple canonical(SizeTuple sizes) {
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

SizeTuple EdgePartition::sizes() const {
  SizeTuple out;
  for (const auto& p : parts) out.push_back(p.count());
  return out;
}

SizeTuple VertexPartition::sizes() const {
  SizeTuple out;
  for (const auto& p : parts) out.push_back(p.count());
  return out;
}

namespace {

template <class Connected>
std::optional<std::string> check_cover(const std::vector<Bitset>& parts, int universe,
                                       Connected&& connected) {
  if (parts.empty()) return "no parts";
  Bitset seen(universe);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& p = parts[i];
    if (p.size() != universe) return "part " + std::to_string(i) + " has wrong universe";
    if (p.none()) return "part " + std::to_string(i) + " is empty";
    if (p.intersects(seen)) return "part " + std::to_string(i) + " overlaps an earlier part";
    if (!connected(p)) return "part " + std::to_string(i) + " is disconnected";
    seen |= p;
  }
  if (seen.count() != universe) return "parts do not cover";
  return std::nullopt;
}

}  // namespace

std::optional<std::string> check_edge_partition(const Graph& g, const EdgePartition& p) {
  return check_cover(p.parts, g.num_edges(),
                     [&](const EdgeSet& f) { return is_connected_edge_set(g, f); });
}

std::optional<std::string> check_vertex_partition(const Graph& g, const VertexPartition& p) {
  return check_cover(p.parts, g.num_vertices(),
                     [&](const VertexSet& s) { return is_connected_vertex_set(g, s); });
}

int cut_size(const Graph& g, const VertexPartition& p) {
  std::vector<int> label(g.num_vertices(), -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i)
    p.parts[i].for_each([&](int v) { label[v] = static_cast<int>(i); });
  int cut = 0;
  for (const Edge& e : g.edges()) cut += label[e.u] != label[e.v];
  return cut;
}

}  // namespace partctl
