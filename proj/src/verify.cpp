#include "partctl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "partctl/arith.hpp"
#include "partctl/bounds.hpp"
#include "partctl/families.hpp"
#include "partctl/splits.hpp"

namespace partctl {

int VerifyReport::checks() const {
  int total = 0;
  for (const auto& r : records) total += static_cast<int>(r.checks.size());
  return total;
}

int VerifyReport::failures() const {
  int total = 0;
  for (const auto& r : records)
    for (const auto& c : r.checks) total += !c.pass;
  return total;
}

namespace {

using Clock = std::chrono::steady_clock;

template <class A, class B>
void expect(GraphRecord& rec, std::string name, bool pass, const A& lhs, const B& rhs) {
  std::ostringstream l, r;
  l << lhs;
  r << rhs;
  rec.checks.push_back({std::move(name), pass, l.str(), r.str()});
}

GraphRecord start_record(std::string spec, const Graph& g) {
  GraphRecord rec;
  rec.spec = std::move(spec);
  rec.n = g.num_vertices();
  rec.m = g.num_edges();
  rec.d = g.average_degree();
  return rec;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

std::int64_t factorial(int k) {
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Profile tuples of `got` missing from `exact`.
int outside_of(const SizeProfile& got, const SizeProfile& exact) {
  int missing = 0;
  for (const auto& t : got) missing += !exact.count(t);
  return missing;
}

template <class Partition>
int invalid_count(const Graph& g, const std::vector<Partition>& parts) {
  int bad = 0;
  for (const auto& p : parts) bad += !is_valid(g, p);
  return bad;
}

// Validity and containment of one constructive edge pipeline.
void check_edge_pipeline(GraphRecord& rec, const Graph& g, const std::string& name,
                         const std::vector<EdgePartition>& parts, const SizeProfile& exact) {
  rec.values[name + ".emitted"] = std::to_string(parts.size());
  expect(rec, name + " partitions invalid", invalid_count(g, parts) == 0, invalid_count(g, parts), 0);
  const int missing = outside_of(profile_of(parts), exact);
  expect(rec, name + " tuples outside exact profile", missing == 0, missing, 0);
}

void inequality_record(VerifyReport& report, int n, int m, std::uint64_t seed,
                       const ExactBudget& budget) {
  const Graph g = random_connected_graph(n, m, seed);
  GraphRecord rec = start_record("random_connected n=" + std::to_string(n) +
                                     " m=" + std::to_string(m) + " seed=" + std::to_string(seed),
                                 g);
  const auto t0 = Clock::now();

  const auto p2 = edge_partition_profile(g, 2, budget);
  const int cmc2 = cmc(g, 2, budget).cut_size;
  const int cmc3 = cmc(g, 3, budget).cut_size;
  rec.values["P2"] = std::to_string(p2.value());
  rec.values["CMC2"] = std::to_string(cmc2);
  rec.values["CMC3"] = std::to_string(cmc3);
  expect(rec, "P(G,2) >= ceil(CMC/2)", p2.value() >= ceil_div(cmc2, 2), p2.value(),
         ceil_div(cmc2, 2));

  check_edge_pipeline(rec, g, "path_cut", path_cut_partitions(g).partitions, p2.profile);
  check_edge_pipeline(rec, g, "splits",
                      two_partitions_from_splits(g, spanning_tree(g, 0)), p2.profile);
  check_edge_pipeline(rec, g, "recursive2", recursive_k_partitions(g, 2), p2.profile);
  if (m == n - 1)
    check_edge_pipeline(rec, g, "tree_lower", tree_lower_bound_partitions(g), p2.profile);

  const bool have_p3 = m <= budget.edge_limit(3);
  EdgeProfileResult p3;
  if (have_p3) {
    p3 = edge_partition_profile(g, 3, budget);
    rec.values["P3"] = std::to_string(p3.value());
  } else {
    rec.values["P3"] = "skipped";
  }
  if (m >= 3) {
    const auto parts = recursive_k_partitions(g, 3);
    if (have_p3) {
      check_edge_pipeline(rec, g, "recursive3", parts, p3.profile);
    } else {
      const int bad = invalid_count(g, parts);
      expect(rec, "recursive3 partitions invalid", bad == 0, bad, 0);
    }
  }
  for (int k : {2, 3}) {
    const std::string name = "packing" + std::to_string(k);
    try {
      const auto packed = packing_partitions(g, k);
      if (k == 2)
        check_edge_pipeline(rec, g, name, packed.partitions, p2.profile);
      else if (have_p3)
        check_edge_pipeline(rec, g, name, packed.partitions, p3.profile);
      else
        expect(rec, name + " partitions invalid", invalid_count(g, packed.partitions) == 0,
               invalid_count(g, packed.partitions), 0);
      const BigInt expected = count_partitions(packed.report.leftover, k, true);
      expect(rec, name + " emitted == leftover distributions",
             BigInt(packed.report.emitted) == expected, packed.report.emitted, expected);
    } catch (const Error& e) {
      if (e.code() != Errc::PackingInfeasible) throw;
      rec.values[name] = "infeasible";
    }
  }

  for (int r : {2, 3}) {
    const int exact_cut = r == 2 ? cmc2 : cmc3;
    const std::string name = "cut_bound" + std::to_string(r);
    try {
      const auto bound = connected_cut_bound(g, r);
      rec.values[name] = std::to_string(bound.witness.cut_size);
      expect(rec, name + " partition valid", is_valid(g, bound.witness.partition), "valid",
             "valid");
      expect(rec, name + " <= CMC", bound.witness.cut_size <= exact_cut, bound.witness.cut_size,
             exact_cut);
    } catch (const Error& e) {
      if (e.code() != Errc::ConstructionFailed) throw;
      rec.values[name] = "construction failed";
    }
  }

  for (int k : {2, 3}) {
    const auto pi = vertex_partition_profile(g, k, budget);
    const auto ordered = ordered_vertex_partitions(g, k);
    const std::string tag = std::to_string(k);
    rec.values["pi" + tag] = std::to_string(pi.value());
    rec.values["ordered" + tag + ".succeeded"] = std::to_string(ordered.report.succeeded);
    const std::int64_t lower = (ordered.report.succeeded + factorial(k) - 1) / factorial(k);
    expect(rec, "ceil(ordered" + tag + "/k!) <= pi(G," + tag + ")", lower <= pi.value(), lower,
           pi.value());
    const int bad = invalid_count(g, ordered.partitions);
    expect(rec, "ordered" + tag + " partitions invalid", bad == 0, bad, 0);
    const int missing = outside_of(profile_of(ordered.partitions), pi.profile);
    expect(rec, "ordered" + tag + " tuples outside exact profile", missing == 0, missing, 0);
  }

  rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  report.records.push_back(std::move(rec));
}

void suite_inequalities(VerifyReport& report, const VerifyOptions& opt) {
  const int count = opt.count > 0 ? opt.count : 100;
  ExactBudget budget = opt.budget;
  // Every graph on at most 10 vertices for k = 2. Exact k = 3 edge
  // profiles keep the default limit; denser graphs only get validity checks.
  budget.max_edges[2] = std::max(budget.edge_limit(2), 45);
  Rng rng(opt.seed);
  for (int i = 0; i < count; ++i) {
    const int n = static_cast<int>(rng.uniform_in(3, 10));
    const int m = static_cast<int>(rng.uniform_in(n - 1, n * (n - 1) / 2));
    inequality_record(report, n, m, rng.next(), budget);
  }
}

void suite_t_table(VerifyReport& report, const VerifyOptions& opt) {
  const int capacity = opt.count > 0 ? opt.count : TTable::kDefaultCapacity;
  const auto t0 = Clock::now();
  const TTable table(capacity);
  GraphRecord rec;
  rec.spec = "t-table capacity=" + std::to_string(capacity);
  rec.n = capacity;

  int first_drop = 0;
  std::string misses;
  for (int n = 2; n <= capacity; ++n) {
    if (!first_drop && table.value(n) < table.value(n - 1)) first_drop = n;
    if (n >= 11 && table.value(n) != 3 + table.value(ceil_div(n - 1, 3)))
      misses += (misses.empty() ? "n=" : ",") + std::to_string(n);
  }
  expect(rec, "t monotone (first decrease)", first_drop == 0, first_drop, 0);
  expect(rec, "t(n) = 3 + t(ceil((n-1)/3)) for n >= 11 (misses)", misses.empty(),
         misses.empty() ? "none" : misses, "none");

  const IntervalTable intervals = table.intervals();
  for (int h = 8; h <= intervals.max_h(); ++h) {
    const Interval got = intervals.preimage(h);
    const Interval want = t_preimage_closed_form(h);
    const std::string name = "t^-1(" + std::to_string(h) + ") closed form";
    std::ostringstream l, r;
    l << "[" << got.lo << "," << got.hi << "]";
    r << "[" << want.lo << "," << want.hi << "]";
    // The last interval is cut off by the table; only its lower end is known.
    const bool pass = got.lo == want.lo && (!got.complete || got.hi == want.hi);
    expect(rec, name, pass, l.str() + (got.complete ? "" : " (truncated)"), r.str());
  }

  std::int64_t ternary = 1, power = 1;
  for (int ell = 0; 10 * ternary <= capacity; ++ell) {
    const int n = static_cast<int>(10 * ternary);
    expect(rec, "t(" + std::to_string(n) + ") = t(10) + 3*" + std::to_string(ell),
           table.value(n) == table.value(10) + 3 * ell, table.value(n), table.value(10) + 3 * ell);
    power *= 3;
    ternary += power;
  }
  rec.values["empirical_constant"] = std::to_string(table.empirical_constant());
  rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  report.records.push_back(std::move(rec));
}

void suite_trees(VerifyReport& report, const VerifyOptions& opt) {
  const int count = opt.count > 0 ? opt.count : 200;
  Rng rng(opt.seed);
  for (int i = 0; i < count; ++i) {
    const int n = static_cast<int>(rng.uniform_in(2, 11));
    const std::uint64_t seed = rng.next();
    const Graph tree = random_connected_graph(n, n - 1, seed);
    GraphRecord rec = start_record(
        "random_tree n=" + std::to_string(n) + " seed=" + std::to_string(seed), tree);
    const auto t0 = Clock::now();
    const SizeProfile fast = tree_exact_P2(tree);
    const auto exact = edge_partition_profile(tree, 2, opt.budget);
    rec.values["P2"] = std::to_string(exact.value());
    expect(rec, "tree_exact_P2 == exhaustive profile", fast == exact.profile, fast.size(),
           exact.value());
    rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report.records.push_back(std::move(rec));
  }

  const TTable table(1000);
  for (int i = 0; i < 500; ++i) {
    const int n = static_cast<int>(rng.uniform_in(2, 500));
    const std::uint64_t seed = rng.next();
    const Graph tree = random_connected_graph(n, n - 1, seed);
    GraphRecord rec = start_record(
        "random_tree n=" + std::to_string(n) + " seed=" + std::to_string(seed), tree);
    const auto t0 = Clock::now();
    const auto root = static_cast<Vertex>(rng.uniform_below(n));
    const RootedTree rooted = RootedTree::from_graph(tree, root);
    const SplitSequence seq = nested_split_sequence(rooted);
    const auto problem = check_split_sequence(tree, seq, root, &table);
    expect(rec, "split sequence invariants (root " + std::to_string(root) + ")", !problem,
           problem.value_or("ok"), "ok");
    expect(rec, "split sequence length >= t(n)+1", seq.length() >= table.value(n) + 1,
           seq.length(), table.value(n) + 1);
    const auto lower = tree_lower_bound_partitions(tree);
    const int count_lower = static_cast<int>(lower.size());
    expect(rec, "tree lower-bound partitions >= t(n)-2", count_lower >= table.value(n) - 2,
           count_lower, table.value(n) - 2);
    const int bad = invalid_count(tree, lower);
    expect(rec, "tree lower-bound partitions invalid", bad == 0, bad, 0);
    const auto distinct = profile_of(lower).size();
    expect(rec, "tree lower-bound tuples distinct", distinct == lower.size(), distinct,
           lower.size());
    rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report.records.push_back(std::move(rec));
  }
}

// 2^{k^2} * sum_{i<k} 2^{i(2 h2 + 1)} h1^{k-1-i}
BigInt size_choice_bound(int h1, int h2, int k) {
  BigInt sum = 0;
  for (int i = 0; i < k; ++i) sum += pow(BigInt(2), i * (2 * h2 + 1)) * pow(BigInt(h1), k - 1 - i);
  return pow(BigInt(2), k * k) * sum;
}

void suite_constr_upper(VerifyReport& report, const VerifyOptions& opt) {
  for (auto [h1, h2] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    const Graph g = make_binary_clique_graph(h1, h2);
    GraphRecord rec = start_record(
        "binary_clique h1=" + std::to_string(h1) + " h2=" + std::to_string(h2), g);
    const auto t0 = Clock::now();
    const int leaf_clique = (1 << (h2 + 1)) - 1;
    const int formula = (1 << (h1 + 1)) - 2 + (1 << h1) * leaf_clique * (leaf_clique - 1) / 2;
    expect(rec, "edge count formula", g.num_edges() == formula, g.num_edges(), formula);
    const auto p = edge_partition_profile(g, 2, ExactBudget::unbounded_sizes());
    rec.values["P2"] = std::to_string(p.value());
    const BigInt bound = size_choice_bound(h1, h2, 2);
    expect(rec, "P(G,2) <= size-choice bound", BigInt(p.value()) <= bound, p.value(), bound);
    check_edge_pipeline(rec, g, "recursive2", recursive_k_partitions(g, 2), p.profile);
    rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report.records.push_back(std::move(rec));
  }

  const int per_degree = opt.count > 0 ? opt.count : 3;
  Rng rng(opt.seed);
  for (int d : {8, 16, 24}) {
    for (int i = 0; i < per_degree; ++i) {
      const int n = 64, m = n * d / 2;
      const std::uint64_t seed = rng.next();
      const Graph g = random_connected_graph(n, m, seed);
      GraphRecord rec = start_record("random_connected n=64 m=" + std::to_string(m) +
                                         " seed=" + std::to_string(seed),
                                     g);
      const auto t0 = Clock::now();
      const auto res = path_cut_partitions(g);
      const auto& r = res.report;
      rec.values["core_min_degree"] = std::to_string(r.core_min_degree);
      rec.values["m_cut"] = std::to_string(r.cut_edges);
      rec.values["distinct_pairs"] = std::to_string(r.distinct_pairs);
      const int delta = r.core_min_degree;
      expect(rec, "core min degree >= d/2", 2 * delta >= d, delta, d / 2.0);
      expect(rec, "m_cut >= ceil(delta^2/4)", r.cut_edges >= ceil_div(delta * delta, 4),
             r.cut_edges, ceil_div(delta * delta, 4));
      expect(rec, "distinct pairs >= ceil(m_cut/2)", r.distinct_pairs >= ceil_div(r.cut_edges, 2),
             r.distinct_pairs, ceil_div(r.cut_edges, 2));
      expect(rec, "ceil(m_cut/2) >= d^2/32", 32 * ceil_div(r.cut_edges, 2) >= d * d,
             ceil_div(r.cut_edges, 2), d * d / 32.0);
      const int bad = invalid_count(g, res.partitions);
      expect(rec, "path-cut partitions invalid", bad == 0, bad, 0);
      rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      report.records.push_back(std::move(rec));
    }
  }

  {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v) pairs.emplace_back(u, v);
    const Graph k5 = build_graph(5, pairs);
    GraphRecord rec = start_record("complete n=5", k5);
    const auto t0 = Clock::now();
    const auto res = packing_partitions(k5, 2);
    const SizeProfile got = profile_of(res.partitions);
    const SizeProfile want{{6, 4}, {5, 5}};
    expect(rec, "packing profile == {(6,4),(5,5)}", got == want, got.size(), want.size());
    const BigInt expected = count_partitions(res.report.leftover, 2, true);
    expect(rec, "emitted == leftover distributions", BigInt(res.report.emitted) == expected,
           res.report.emitted, expected);
    const int bad = invalid_count(k5, res.partitions);
    expect(rec, "packing partitions invalid", bad == 0, bad, 0);
    rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report.records.push_back(std::move(rec));
  }
  for (int n : {3, 6, 10}) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < n; ++v) pairs.emplace_back(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    const Graph cycle = build_graph(n, pairs);
    GraphRecord rec = start_record("cycle n=" + std::to_string(n), cycle);
    std::string outcome = "ok";
    try {
      packing_partitions(cycle, 2);
    } catch (const Error& e) {
      outcome = std::string(to_string(e.code()));
    }
    expect(rec, "packing on a cycle", outcome == "PackingInfeasible", outcome,
           "PackingInfeasible");
    report.records.push_back(std::move(rec));
  }
}

void suite_erdos_lehner(VerifyReport& report, const VerifyOptions&) {
  for (auto [n, k] : {std::pair{100, 2}, {100, 3}}) {
    GraphRecord rec;
    rec.spec = "path n=" + std::to_string(n) + " k=" + std::to_string(k);
    rec.n = n;
    rec.m = n - 1;
    const auto t0 = Clock::now();
    const BigInt pi = count_partitions(n, k);
    rec.values["pi"] = pi.str();
    const double ratio = pi.convert_to<double>() / erdos_lehner_estimate(n, k);
    rec.values["ratio"] = std::to_string(ratio);
    expect(rec, "|pi(n,k) k!/C(n-1,k-1) - 1| <= 0.1", std::abs(ratio - 1.0) <= 0.1,
           std::abs(ratio - 1.0), 0.1);
    rec.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report.records.push_back(std::move(rec));
  }
  // Connected vertex partitions of a path are compositions, so the exact
  // solver on a path must reproduce the partition counts.
  for (int n = 1; n <= 12; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v + 1 < n; ++v) pairs.emplace_back(v, v + 1);
    const Graph path = build_graph(n, pairs);
    GraphRecord rec = start_record("path n=" + std::to_string(n), path);
    for (int k = 2; k <= std::min(n, 4); ++k) {
      const auto exact = vertex_partition_profile(path, k, ExactBudget::unbounded_sizes());
      const BigInt formula = count_partitions(n, k);
      expect(rec, "pi(P_n," + std::to_string(k) + ") == p(n," + std::to_string(k) + ")",
             BigInt(exact.value()) == formula, exact.value(), formula);
    }
    report.records.push_back(std::move(rec));
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"inequalities", "t-table", "trees", "constr-upper", "erdos-lehner"};
}

VerifyReport run_suite(std::string_view suite, const VerifyOptions& options) {
  VerifyReport report;
  report.suite = std::string(suite);
  report.seed = options.seed;
  if (suite == "inequalities")
    suite_inequalities(report, options);
  else if (suite == "t-table")
    suite_t_table(report, options);
  else if (suite == "trees")
    suite_trees(report, options);
  else if (suite == "constr-upper")
    suite_constr_upper(report, options);
  else if (suite == "erdos-lehner")
    suite_erdos_lehner(report, options);
  else
    throw Error(Errc::UnknownSuite, std::string(suite));
  return report;
}

std::string report_json(const VerifyReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    records.push_back({{"spec", r.spec},
                       {"n", r.n},
                       {"m", r.m},
                       {"d", r.d},
                       {"values", r.values},
                       {"checks", checks},
                       {"seconds", r.seconds}});
  }
  const nlohmann::json doc{{"schema", "partctl/1"},
                           {"suite", report.suite},
                           {"seed", report.seed},
                           {"checks", report.checks()},
                           {"failures", report.failures()},
                           {"records", records}};
  return doc.dump(2);
}

void write_table(std::ostream& out, const VerifyReport& report) {
  out << std::left << std::setw(52) << "graph" << std::right << std::setw(6) << "n"
      << std::setw(6) << "m" << std::setw(8) << "d" << std::setw(8) << "checks" << std::setw(8)
      << "failed" << std::setw(10) << "seconds" << '\n';
  for (const auto& r : report.records) {
    const auto failed = std::count_if(r.checks.begin(), r.checks.end(),
                                      [](const Check& c) { return !c.pass; });
    out << std::left << std::setw(52) << r.spec << std::right << std::setw(6) << r.n
        << std::setw(6) << r.m << std::setw(8) << std::fixed << std::setprecision(2) << r.d
        << std::setw(8) << r.checks.size() << std::setw(8) << failed << std::setw(10)
        << std::setprecision(3) << r.seconds << '\n';
    for (const auto& c : r.checks)
      if (!c.pass) out << "  FAIL " << c.name << ": " << c.lhs << " vs " << c.rhs << '\n';
  }
  out << report.suite << ": " << report.checks() - report.failures() << "/" << report.checks()
      << " checks passed\n";
}

}  // namespace partctl
