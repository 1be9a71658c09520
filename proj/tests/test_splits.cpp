#include <doctest.h>

#include "oracles.hpp"
#include "partctl/exact.hpp"
#include "partctl/families.hpp"
#include "partctl/splits.hpp"

using namespace partctl;

namespace {

const TTable& table() {
  static const TTable t(100'000);
  return t;
}

Graph random_tree(int n, std::uint64_t seed) { return random_connected_graph(n, n - 1, seed); }

oracle::Profile as_oracle(const SizeProfile& p) { return {p.begin(), p.end()}; }

}  // namespace

TEST_CASE("split sequence of a single vertex") {
  const RootedTree t = RootedTree::from_graph(build_graph(1, std::vector<std::pair<int, int>>{}), 0);
  const SplitSequence seq = nested_split_sequence(t);
  REQUIRE(seq.length() == 1);
  CHECK(seq.items[0].pivot == 0);
  CHECK(seq.items[0].a.count() == 1);
  CHECK(seq.items[0].b.count() == 1);
  CHECK_FALSE(check_split_sequence(t.graph, seq, 0, &table()));
}

TEST_CASE("split sequence of a star rooted at its center") {
  const RootedTree t = RootedTree::from_graph(oracle::star(3), 0);
  const SplitSequence seq = nested_split_sequence(t);
  REQUIRE(seq.length() == 4);
  CHECK(seq.length() == table().value(4) + 1);
  CHECK(seq.items[0].b.to_vector() == std::vector<int>{0});
  // All components tie; the one with the smallest id ({1}) is kept for last.
  CHECK(seq.items[1].b.to_vector() == std::vector<int>{0, 2});
  CHECK(seq.items[2].b.to_vector() == std::vector<int>{0, 2, 3});
  CHECK(seq.items[3].pivot == 1);
  CHECK(seq.items[3].b.count() == 4);
  CHECK_FALSE(check_split_sequence(t.graph, seq, 0, &table()));
}

TEST_CASE("split sequence of a path from an endpoint has length n") {
  for (int n = 2; n <= 30; ++n) {
    const RootedTree t = RootedTree::from_graph(oracle::path(n), 0);
    const SplitSequence seq = nested_split_sequence(t);
    CHECK(seq.length() == n);
    CHECK(seq.length() >= table().value(n) + 1);
    CHECK_FALSE(check_split_sequence(t.graph, seq, 0, &table()));
  }
}

TEST_CASE("split sequence invariants on random trees") {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    const int n = static_cast<int>(rng.uniform_in(1, 300));
    const Graph g = random_tree(n, rng.next());
    const auto root = static_cast<Vertex>(rng.uniform_below(n));
    const SplitSequence seq = nested_split_sequence(RootedTree::from_graph(g, root));
    const auto problem = check_split_sequence(g, seq, root, &table());
    CHECK_MESSAGE(!problem, problem.value_or(""));
  }
}

TEST_CASE("check_split_sequence catches broken sequences") {
  const Graph g = oracle::path(5);
  const SplitSequence good = nested_split_sequence(RootedTree::from_graph(g, 0));
  REQUIRE_FALSE(check_split_sequence(g, good, 0, &table()));

  SplitSequence wrong_root = good;
  CHECK(check_split_sequence(g, wrong_root, 1));

  SplitSequence overlap = good;
  overlap.items[1].a.set(4);
  overlap.items[1].b.set(4);
  CHECK(check_split_sequence(g, overlap, 0));

  SplitSequence not_nested = good;
  std::swap(not_nested.items[1], not_nested.items[2]);
  CHECK(check_split_sequence(g, not_nested, 0));

  SplitSequence too_short = good;
  too_short.items.resize(2);
  CHECK(check_split_sequence(g, too_short, 0, &table()));
}

TEST_CASE("centroid") {
  CHECK(centroid(oracle::path(5)) == 2);
  CHECK(centroid(oracle::star(4)) == 0);
  CHECK(centroid(oracle::path(4)) == 1);
}

TEST_CASE("two partitions from splits") {
  SUBCASE("cycle with its BFS tree") {
    const Graph c4 = oracle::cycle(4);
    const auto parts = two_partitions_from_splits(c4, spanning_tree(c4, 0));
    CHECK(parts.size() >= 2);
    const SizeProfile got = profile_of(parts);
    const auto exact = oracle::edge_profile(c4, 2);
    for (const auto& t : got) CHECK(exact.count(t));
  }
  SUBCASE("path from an endpoint") {
    const Graph p4 = oracle::path(4);
    const auto parts = two_partitions_from_splits(p4, RootedTree::from_graph(p4, 0));
    CHECK(static_cast<int>(parts.size()) >= table().value(4) + 1 - 2);
    CHECK(profile_of(parts) == SizeProfile{{2, 1}});
  }
  SUBCASE("star from its center") {
    const Graph s = oracle::star(4);
    const auto parts = two_partitions_from_splits(s, RootedTree::from_graph(s, 0));
    int prev = 0;
    for (const auto& p : parts) {
      CHECK(is_valid(s, p));
      CHECK(p.parts[1].count() > prev);
      prev = p.parts[1].count();
    }
  }
}

TEST_CASE("two partitions from splits on random graphs") {
  Rng rng(11);
  for (int i = 0; i < 150; ++i) {
    const int n = static_cast<int>(rng.uniform_in(2, 9));
    const int m = static_cast<int>(rng.uniform_in(n - 1, std::min(n * (n - 1) / 2, 14)));
    const Graph g = random_connected_graph(n, m, rng.next());
    const RootedTree t = spanning_tree(g, static_cast<Vertex>(rng.uniform_below(n)));
    const auto parts = two_partitions_from_splits(g, t);
    const auto exact = oracle::edge_profile(g, 2);
    int prev = 0;
    for (const auto& p : parts) {
      REQUIRE(is_valid(g, p));
      CHECK(p.parts[1].count() > prev);
      prev = p.parts[1].count();
      CHECK(exact.count(canonical(p.sizes())));
    }
    // At most two splits are degenerate.
    const int length = nested_split_sequence(t).length();
    CHECK(static_cast<int>(parts.size()) >= length - 2);
  }
}

TEST_CASE("recursive k partitions") {
  SUBCASE("small tree, k = 2") {
    const Graph p3 = oracle::path(3);
    const auto parts = recursive_k_partitions(p3, 2);
    for (const auto& p : parts) CHECK(is_valid(p3, p));
    CHECK(profile_of(parts) == SizeProfile{{1, 1}});
  }
  SUBCASE("cycle C6, k = 3") {
    const Graph c6 = oracle::cycle(6);
    const auto parts = recursive_k_partitions(c6, 3);
    std::set<SizeTuple> ordered;
    const auto exact = oracle::edge_profile(c6, 3);
    for (const auto& p : parts) {
      CHECK(is_valid(c6, p));
      CHECK(ordered.insert(p.sizes()).second);
      CHECK(exact.count(canonical(p.sizes())));
    }
    CHECK_FALSE(parts.empty());
  }
  SUBCASE("K4, k = 2") {
    const Graph k4 = oracle::complete(4);
    CHECK(profile_of(recursive_k_partitions(k4, 2)).size() >= 2);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(recursive_k_partitions(oracle::path(3), 3), Error);
    CHECK_THROWS_AS(recursive_k_partitions(oracle::path(3), 1), Error);
    CHECK_THROWS_AS(recursive_k_partitions(build_graph(4, {{0, 1}, {2, 3}}), 2), Error);
  }
}

TEST_CASE("recursive k partitions on random graphs against brute force") {
  Rng rng(3);
  for (int i = 0; i < 120; ++i) {
    const int k = 2 + static_cast<int>(i % 3);
    const int n = static_cast<int>(rng.uniform_in(3, 8));
    const int cap = k == 2 ? 14 : k == 3 ? 10 : 8;
    const int hi = std::min(n * (n - 1) / 2, cap);
    if (hi < std::max(n - 1, k)) continue;
    const int m = static_cast<int>(rng.uniform_in(std::max(n - 1, k), hi));
    const Graph g = random_connected_graph(n, m, rng.next());
    const auto parts = recursive_k_partitions(g, k);
    const auto exact = oracle::edge_profile(g, k);
    std::set<SizeTuple> ordered;
    for (const auto& p : parts) {
      REQUIRE(p.parts.size() == static_cast<std::size_t>(k));
      CHECK(is_valid(g, p));
      CHECK(ordered.insert(p.sizes()).second);
      CHECK(exact.count(canonical(p.sizes())));
    }
  }
}

TEST_CASE("recursive k partitions on larger graphs stay valid and distinct") {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const int n = static_cast<int>(rng.uniform_in(20, 80));
    const Graph g = random_connected_graph(n, n - 1 + static_cast<int>(rng.uniform_below(2 * n)),
                                           rng.next());
    for (int k = 2; k <= 4; ++k) {
      const auto parts = recursive_k_partitions(g, k);
      std::set<SizeTuple> ordered;
      for (const auto& p : parts) {
        CHECK(is_valid(g, p));
        CHECK(ordered.insert(p.sizes()).second);
      }
      if (k == 2) CHECK(parts.size() >= 2);
    }
  }
}

TEST_CASE("tree_exact_P2 closed cases") {
  for (int n = 2; n <= 12; ++n) {
    SizeProfile want;
    for (int i = 1; i <= (n - 1) / 2; ++i) want.insert({n - 1 - i, i});
    CHECK(tree_exact_P2(oracle::path(n)) == want);
  }
  for (int q = 1; q <= 8; ++q) {
    CHECK(static_cast<int>(tree_exact_P2(oracle::star(q)).size()) == q / 2);
    CHECK(as_oracle(tree_exact_P2(oracle::star(q))) == oracle::edge_profile(oracle::star(q), 2));
  }
  const SizeProfile t1 = tree_exact_P2(make_T_ell(1).graph);
  CHECK(t1 == SizeProfile{{10, 5}, {13, 2}, {11, 4}, {14, 1}});
  CHECK(static_cast<int>(t1.size()) == table().value(16) - 2);
}

TEST_CASE("tree_exact_P2 equals brute force on random trees") {
  Rng rng(19);
  for (int i = 0; i < 250; ++i) {
    const int n = static_cast<int>(rng.uniform_in(1, 12));
    const Graph g = random_tree(n, rng.next());
    CHECK(as_oracle(tree_exact_P2(g)) == oracle::edge_profile(g, 2));
  }
}

TEST_CASE("tree_exact_P2 on T(ell) is t(n) - 2") {
  for (int ell = 1; ell <= 5; ++ell) {
    const RootedTree t = make_T_ell(ell);
    CHECK(static_cast<int>(tree_exact_P2(t.graph).size()) ==
          table().value(t.num_vertices()) - 2);
  }
}

TEST_CASE("tree lower-bound partitions") {
  SUBCASE("path P4, equal halves") {
    const auto parts = tree_lower_bound_partitions(oracle::path(4));
    CHECK(static_cast<int>(parts.size()) >= table().value(4) - 2);
  }
  SUBCASE("star K1,4, heavy centroid") {
    const auto parts = tree_lower_bound_partitions(oracle::star(4));
    CHECK(static_cast<int>(parts.size()) >= table().value(5) - 2);
  }
  SUBCASE("T(2)") {
    const Graph g = make_T_ell(2).graph;
    const auto parts = tree_lower_bound_partitions(g);
    const SizeProfile exact = tree_exact_P2(g);
    CHECK(static_cast<int>(parts.size()) >= table().value(49) - 2);
    CHECK(static_cast<int>(exact.size()) == table().value(49) - 2);
    for (const auto& p : parts) CHECK(exact.count(canonical(p.sizes())));
  }
  SUBCASE("tiny trees give nothing") {
    CHECK(tree_lower_bound_partitions(oracle::path(1)).empty());
    CHECK(tree_lower_bound_partitions(oracle::path(2)).empty());
  }
}

TEST_CASE("tree lower-bound partitions on random trees") {
  Rng rng(23);
  for (int i = 0; i < 400; ++i) {
    const int n = static_cast<int>(rng.uniform_in(3, 400));
    const Graph g = random_tree(n, rng.next());
    const auto parts = tree_lower_bound_partitions(g);
    CHECK(static_cast<int>(parts.size()) >= table().value(n) - 2);
    int prev = 0;
    const SizeProfile exact = tree_exact_P2(g);
    for (const auto& p : parts) {
      REQUIRE(is_valid(g, p));
      CHECK(p.parts[1].count() > prev);
      prev = p.parts[1].count();
      CHECK(exact.count(canonical(p.sizes())));
    }
  }
}
