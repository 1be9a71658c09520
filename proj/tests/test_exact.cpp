#include <doctest.h>

#include "oracles.hpp"
#include "partctl/exact.hpp"
#include "partctl/families.hpp"
#include "partctl/splits.hpp"

using namespace partctl;

namespace {

oracle::Profile as_oracle(const SizeProfile& p) { return {p.begin(), p.end()}; }

std::vector<int> smallest_parts(const SizeProfile& p) {
  std::vector<int> out;
  for (const auto& t : p) out.push_back(t.back());
  std::sort(out.begin(), out.end());
  return out;
}

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error");
  return Errc::ParseError;
}

}  // namespace

TEST_CASE("edge profiles of small named graphs") {
  const auto c4 = edge_partition_profile(oracle::cycle(4), 2);
  CHECK(c4.profile == SizeProfile{{3, 1}, {2, 2}});
  CHECK(c4.value() == 2);
  for (const auto& [t, w] : c4.witnesses) {
    CHECK(is_valid(oracle::cycle(4), w));
    CHECK(canonical(w.sizes()) == t);
  }

  const auto p2 = edge_partition_profile(oracle::path(2), 2);
  CHECK(p2.fewer_edges_than_parts);
  CHECK(p2.value() == 0);

  CHECK(error_of([] { edge_partition_profile(build_graph(4, {{0, 1}, {2, 3}}), 2); }) ==
        Errc::Disconnected);
  CHECK(error_of([] { edge_partition_profile(oracle::complete(10), 3); }) == Errc::TooLarge);
}

TEST_CASE("edge profile of the non-monotone example and its edge-deleted subgraph") {
  const NonmonotoneExample ex = make_nonmonotone_example();
  const auto full = edge_partition_profile(ex.graph, 2);
  CHECK(full.value() == 8);
  CHECK(smallest_parts(full.profile) == std::vector<int>{1, 2, 3, 4, 8, 9, 18, 19});
  for (const auto& [t, w] : full.witnesses) CHECK(is_valid(ex.graph, w));

  const Graph minus = without_edge(ex.graph, ex.distinguished);
  const auto less = edge_partition_profile(minus, 2);
  CHECK(less.value() == 9);
  CHECK(smallest_parts(less.profile) == std::vector<int>{1, 2, 3, 4, 7, 8, 9, 17, 18});
}

TEST_CASE("edge profiles equal brute force on random graphs") {
  Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    const int k = 2 + static_cast<int>(i % 3);
    const int n = static_cast<int>(rng.uniform_in(2, 8));
    const int cap = k == 2 ? 15 : k == 3 ? 10 : 8;
    const int hi = std::min(n * (n - 1) / 2, cap);
    if (hi < n - 1) continue;
    const int m = static_cast<int>(rng.uniform_in(n - 1, hi));
    const Graph g = random_connected_graph(n, m, rng.next());
    const auto res = edge_partition_profile(g, k);
    CHECK(as_oracle(res.profile) == oracle::edge_profile(g, k));
    CHECK(res.witnesses.size() == res.profile.size());
    for (const auto& [t, w] : res.witnesses) {
      CHECK(is_valid(g, w));
      CHECK(canonical(w.sizes()) == t);
    }
  }
}

TEST_CASE("vertex profiles") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(BigInt(vertex_partition_profile(oracle::complete(n), k).value()) ==
            count_partitions(n, k));
  CHECK(vertex_partition_profile(oracle::path(4), 3).profile == SizeProfile{{2, 1, 1}});
  CHECK(vertex_partition_profile(oracle::path(4), 2).profile == SizeProfile{{3, 1}, {2, 2}});
  CHECK(vertex_partition_profile(oracle::path(2), 3).fewer_vertices_than_parts);

  Rng rng(202);
  for (int i = 0; i < 200; ++i) {
    const int k = 2 + static_cast<int>(i % 3);
    const int n = static_cast<int>(rng.uniform_in(2, 8));
    const int m = static_cast<int>(rng.uniform_in(n - 1, n * (n - 1) / 2));
    const Graph g = random_connected_graph(n, m, rng.next());
    const auto res = vertex_partition_profile(g, k);
    CHECK(as_oracle(res.profile) == oracle::vertex_profile(g, k));
    for (const auto& [t, w] : res.witnesses) {
      CHECK(is_valid(g, w));
      CHECK(canonical(w.sizes()) == t);
    }
  }
}

TEST_CASE("connected max cut") {
  CHECK(cmc(oracle::complete(4), 2).cut_size == 4);
  CHECK(cmc(oracle::cycle(4), 2).cut_size == 2);
  CHECK(error_of([] { cmc(oracle::path(2), 3); }) == Errc::TooSmall);

  Rng rng(303);
  for (int i = 0; i < 60; ++i) {
    const int n = static_cast<int>(rng.uniform_in(2, 10));
    const Graph tree = random_connected_graph(n, n - 1, rng.next());
    CHECK(cmc(tree, 2).cut_size == 1);
  }
  for (int i = 0; i < 200; ++i) {
    const int r = 2 + static_cast<int>(i % 3);
    const int n = static_cast<int>(rng.uniform_in(r, 8));
    const int m = static_cast<int>(rng.uniform_in(n - 1, n * (n - 1) / 2));
    const Graph g = random_connected_graph(n, m, rng.next());
    const CutWitness w = cmc(g, r);
    CHECK(w.cut_size == oracle::connected_max_cut(g, r));
    CHECK(is_valid(g, w.partition));
    CHECK(w.partition.parts.size() == static_cast<std::size_t>(r));
    CHECK(cut_size(g, w.partition) == w.cut_size);
  }
}

TEST_CASE("P(G,2) >= ceil(CMC/2)") {
  // A single edge has a connected cut but no 2-edge-partition.
  CHECK(edge_partition_profile(oracle::path(2), 2).value() == 0);
  CHECK(cmc(oracle::path(2), 2).cut_size == 1);

  Rng rng(404);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(rng.uniform_in(3, 9));
    const int m = static_cast<int>(rng.uniform_in(n - 1, std::min(n * (n - 1) / 2, 24)));
    const Graph g = random_connected_graph(n, m, rng.next());
    CHECK(edge_partition_profile(g, 2).value() >= (cmc(g, 2).cut_size + 1) / 2);
  }
}

TEST_CASE("edge profiles of trees equal tree_exact_P2") {
  Rng rng(505);
  for (int i = 0; i < 100; ++i) {
    const int n = static_cast<int>(rng.uniform_in(2, 30));
    const Graph tree = random_connected_graph(n, n - 1, rng.next());
    CHECK(edge_partition_profile(tree, 2).profile == tree_exact_P2(tree));
  }
}

TEST_CASE("gyori_lovasz small examples") {
  const std::vector<int> two_three{2, 3};
  const auto c5 = gyori_lovasz(oracle::cycle(5), two_three);
  REQUIRE(c5);
  CHECK(is_valid(oracle::cycle(5), *c5));
  CHECK(c5->sizes() == two_three);

  const std::vector<int> halves{2, 2};
  const auto k4 = gyori_lovasz(oracle::complete(4), halves);
  REQUIRE(k4);
  CHECK(k4->sizes() == halves);

  CHECK_FALSE(gyori_lovasz(oracle::star(4), two_three).has_value());

  const std::vector<int> wrong{2, 2};
  CHECK(error_of([&] { gyori_lovasz(oracle::cycle(5), wrong); }) == Errc::SizeMismatch);
}

TEST_CASE("gyori_lovasz two parts on biconnected graphs up to 10 vertices") {
  Rng rng(606);
  int tested = 0;
  for (int i = 0; i < 400 && tested < 150; ++i) {
    const int n = static_cast<int>(rng.uniform_in(3, 10));
    const int m = static_cast<int>(rng.uniform_in(n, n * (n - 1) / 2));
    const Graph g = random_connected_graph(n, m, rng.next());
    if (!is_biconnected(g)) continue;
    ++tested;
    for (int a = 1; a < n; ++a) {
      const std::vector<int> sizes{a, n - a};
      const auto p = gyori_lovasz(g, sizes);
      REQUIRE(p);
      CHECK(is_valid(g, *p));
      CHECK(p->sizes() == sizes);
    }
  }
  CHECK(tested >= 100);
}

TEST_CASE("gyori_lovasz exhaustive search agrees with brute force") {
  Rng rng(707);
  for (int i = 0; i < 120; ++i) {
    const int n = static_cast<int>(rng.uniform_in(3, 8));
    const int m = static_cast<int>(rng.uniform_in(n - 1, n * (n - 1) / 2));
    const Graph g = random_connected_graph(n, m, rng.next());
    const int k = 2 + static_cast<int>(i % 2);
    if (n < k) continue;
    std::vector<int> sizes(k, 1);
    sizes.back() = n - (k - 1);
    for (int j = 0; j + 1 < k; ++j) {
      const int extra = static_cast<int>(rng.uniform_below(sizes.back()));
      sizes[j] += extra;
      sizes.back() -= extra;
    }
    const auto p = gyori_lovasz(g, sizes);
    CHECK(p.has_value() == oracle::sizes_realizable(g, sizes));
    if (p) {
      CHECK(is_valid(g, *p));
      CHECK(p->sizes() == sizes);
    }
    // k-connected graphs always admit every size vector.
    if (oracle::k_connected(g, k)) CHECK(p.has_value());
  }
}

TEST_CASE("gyori_lovasz three parts on 3-connected graphs up to 10 vertices") {
  Rng rng(808);
  int tested = 0;
  for (int i = 0; i < 200 && tested < 25; ++i) {
    const int n = static_cast<int>(rng.uniform_in(4, 10));
    const int m = static_cast<int>(rng.uniform_in(n * 3 / 2, n * (n - 1) / 2));
    const Graph g = random_connected_graph(n, m, rng.next());
    if (!oracle::k_connected(g, 3)) continue;
    ++tested;
    for (int a = 1; a <= n - 2; ++a)
      for (int b = 1; a + b <= n - 1; ++b) {
        const std::vector<int> sizes{a, b, n - a - b};
        const auto p = gyori_lovasz(g, sizes);
        REQUIRE(p);
        CHECK(is_valid(g, *p));
      }
  }
  CHECK(tested >= 10);
}

TEST_CASE("budget limits raise TooLarge instead of truncating") {
  ExactBudget tight;
  tight.max_nodes = 10;
  CHECK(error_of([&] { edge_partition_profile(make_nonmonotone_example().graph, 2, tight); }) ==
        Errc::TooLarge);
  ExactBudget narrow;
  narrow.max_edges[2] = 5;
  CHECK(error_of([&] { edge_partition_profile(oracle::cycle(6), 2, narrow); }) ==
        Errc::TooLarge);
  CHECK(ExactBudget::unbounded_sizes().edge_limit(2) == 64);
}
