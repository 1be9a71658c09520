// partctl: command-line front end for the partition library.
//
// Exit codes: 0 ok, 1 other library error, 2 usage, 3 parse, 4 budget,
// 5 internal check failed (including failed verify suites).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "partctl/arith.hpp"
#include "partctl/bounds.hpp"
#include "partctl/exact.hpp"
#include "partctl/families.hpp"
#include "partctl/graph_io.hpp"
#include "partctl/splits.hpp"
#include "partctl/verify.hpp"

using namespace partctl;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitBudget = 4;
constexpr int kExitCheck = 5;

struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json tuple_list(const SizeProfile& profile) {
  json out = json::array();
  for (const auto& t : profile) out.push_back(t);
  return out;
}

std::string tuple_key(const SizeTuple& t) {
  std::string key;
  for (std::size_t i = 0; i < t.size(); ++i) key += (i ? "," : "") + std::to_string(t[i]);
  return key;
}

json edge_parts(const Graph& g, const EdgePartition& p) {
  json parts = json::array();
  for (const auto& part : p.parts) {
    json edges = json::array();
    part.for_each([&](int e) { edges.push_back({g.edge(e).u, g.edge(e).v}); });
    parts.push_back(edges);
  }
  return parts;
}

json vertex_parts(const VertexPartition& p) {
  json parts = json::array();
  for (const auto& part : p.parts) parts.push_back(part.to_vector());
  return parts;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

template <class Partition>
void require_valid(const Graph& g, const std::vector<Partition>& parts) {
  for (const auto& p : parts)
    if (!is_valid(g, p)) throw CheckFailed("emitted partition failed validation");
}

void print_profile(const SizeProfile& profile, int value) {
  std::cout << "value " << value << '\n';
  for (const auto& t : profile) {
    for (std::size_t i = 0; i < t.size(); ++i) std::cout << (i ? " " : "") << t[i];
    std::cout << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected partitions of graphs: exact profiles, constructions, verification"};
  app.require_subcommand(1);

  ExactBudget budget;
  int max_edges = 0;
  std::uint64_t max_nodes = 0;
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--max-edges", max_edges, "Raise the edge limit for this k (<= 64)");
    cmd->add_option("--max-nodes", max_nodes, "Search node limit");
  };

  // exact
  auto* exact = app.add_subcommand("exact", "Exact P(G,k), pi(G,k) or CMC_r(G)");
  std::string what, input;
  int k = 2;
  bool as_json = false;
  exact->add_option("--what", what, "P, pi or cmc")
      ->required()
      ->check(CLI::IsMember({"P", "pi", "cmc"}));
  exact->add_option("--k", k, "Number of parts")->check(CLI::Range(1, 64));
  exact->add_option("--input", input, "Graph file")->required();
  exact->add_flag("--json", as_json, "JSON output");
  add_budget(exact);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Constructive lower-bound pipelines");
  std::string method, report_path;
  int r = 2;
  bounds->add_option("--method", method, "pathcut, packing, cmc or pi")
      ->required()
      ->check(CLI::IsMember({"pathcut", "packing", "cmc", "pi"}));
  bounds->add_option("--k", k, "Number of parts (packing, pi)")->check(CLI::Range(2, 64));
  bounds->add_option("--r", r, "Number of parts (cmc)")->check(CLI::Range(2, 64));
  bounds->add_option("--input", input, "Graph file")->required();
  bounds->add_option("--report", report_path, "Write the construction report as JSON");

  // family
  auto* family = app.add_subcommand("family", "Write a named graph family member");
  std::string name, out_path;
  int ell = 1, height = 1, h1 = 1, h2 = 1, n = 10;
  std::int64_t m = 9;
  std::uint64_t seed = 0;
  bool minus_e = false;
  family->add_option("--name", name)
      ->required()
      ->check(CLI::IsMember(
          {"T_ell", "ternary", "binary_clique", "nonmonotone_example", "random_connected"}));
  family->add_option("--ell", ell, "T_ell height");
  family->add_option("--height", height, "ternary height");
  family->add_option("--h1", h1, "binary_clique tree depth");
  family->add_option("--h2", h2, "binary_clique clique depth");
  family->add_option("--n", n, "random_connected vertices");
  family->add_option("--m", m, "random_connected edges");
  family->add_option("--seed", seed, "random_connected seed (default 0)");
  family->add_flag("--minus-e", minus_e, "nonmonotone_example without its distinguished edge");
  family->add_option("--out", out_path, "Output file (default stdout)");

  // tseq
  auto* tseq = app.add_subcommand("tseq", "Tabulate t(n) as CSV");
  int max_n = 100;
  bool intervals = false;
  tseq->add_option("--max", max_n, "Largest n")->check(CLI::Range(1, 100'000'000));
  tseq->add_flag("--intervals", intervals, "Emit preimage intervals h,lo,hi");

  // splits
  auto* splits = app.add_subcommand("splits", "Nested split sequence of a tree as JSON");
  int root = 0;
  splits->add_option("--input", input, "Tree file")->required();
  splits->add_option("--root", root, "Root vertex");

  // tree-p2
  auto* tree_p2 = app.add_subcommand("tree-p2", "Exact P(T,2) profile of a tree as CSV");
  tree_p2->add_option("--input", input, "Tree file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  int count = 0;
  verify->add_option("--suite", suite, "inequalities, t-table, trees, constr-upper, erdos-lehner")
      ->required();
  verify->add_option("--seed", seed, "Seed (default 0)");
  verify->add_option("--count", count, "Graphs per suite (0: suite default)");
  verify->add_option("--out", out_path, "Write the JSON report here");
  add_budget(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (max_nodes > 0) budget.max_nodes = max_nodes;
    if (max_edges > 0) {
      budget.max_edges[k] = std::min(max_edges, 64);
      budget.max_vertices[k] = std::min(max_edges, 64);
    }

    if (*exact) {
      const Graph g = read_graph_file(input);
      json doc{{"schema", "partctl/1"}};
      if (what == "cmc") {
        const CutWitness w = cmc(g, k, budget);
        if (!is_valid(g, w.partition) || cut_size(g, w.partition) != w.cut_size)
          throw CheckFailed("cmc witness failed validation");
        doc["value"] = w.cut_size;
        doc["witness"] = vertex_parts(w.partition);
        if (!as_json) {
          std::cout << "value " << w.cut_size << '\n';
          for (const auto& part : w.partition.parts) {
            for (int v : part.to_vector()) std::cout << v << ' ';
            std::cout << '\n';
          }
          return 0;
        }
      } else if (what == "P") {
        const auto res = edge_partition_profile(g, k, budget);
        json witness = json::object();
        for (const auto& [t, p] : res.witnesses) {
          if (!is_valid(g, p)) throw CheckFailed("witness failed validation");
          witness[tuple_key(t)] = edge_parts(g, p);
        }
        doc["value"] = res.value();
        doc["profile"] = tuple_list(res.profile);
        doc["witness"] = witness;
        if (!as_json) {
          print_profile(res.profile, res.value());
          return 0;
        }
      } else {
        const auto res = vertex_partition_profile(g, k, budget);
        json witness = json::object();
        for (const auto& [t, p] : res.witnesses) {
          if (!is_valid(g, p)) throw CheckFailed("witness failed validation");
          witness[tuple_key(t)] = vertex_parts(p);
        }
        doc["value"] = res.value();
        doc["profile"] = tuple_list(res.profile);
        doc["witness"] = witness;
        if (!as_json) {
          print_profile(res.profile, res.value());
          return 0;
        }
      }
      std::cout << doc.dump() << '\n';
      return 0;
    }

    if (*bounds) {
      const Graph g = read_graph_file(input);
      json doc{{"schema", "partctl/1"}, {"method", method}};
      json report;
      if (method == "pathcut") {
        const auto res = path_cut_partitions(g);
        require_valid(g, res.partitions);
        const auto& rep = res.report;
        report = {{"core_vertices", rep.core_vertices}, {"core_min_degree", rep.core_min_degree},
                  {"path_length", rep.path_length},     {"path_vertices", rep.path_vertices},
                  {"cut_edges", rep.cut_edges},         {"emitted", rep.emitted},
                  {"distinct_pairs", rep.distinct_pairs}};
        doc["value"] = profile_of(res.partitions).size();
        doc["profile"] = tuple_list(profile_of(res.partitions));
      } else if (method == "packing") {
        const auto res = packing_partitions(g, k);
        require_valid(g, res.partitions);
        const auto& rep = res.report;
        report = {{"core_vertices", rep.core_vertices}, {"core_edges", rep.core_edges},
                  {"leftover", rep.leftover},           {"outside_edges", rep.outside_edges},
                  {"emitted", rep.emitted}};
        doc["value"] = profile_of(res.partitions).size();
        doc["profile"] = tuple_list(profile_of(res.partitions));
      } else if (method == "cmc") {
        const auto res = connected_cut_bound(g, r);
        if (!is_valid(g, res.witness.partition)) throw CheckFailed("cut witness failed validation");
        const auto& rep = res.report;
        report = {{"core_vertices", rep.core_vertices},
                  {"core_min_degree", rep.core_min_degree},
                  {"core_sizes", rep.core_sizes},
                  {"method", rep.method}};
        doc["value"] = res.witness.cut_size;
        doc["witness"] = vertex_parts(res.witness.partition);
      } else {
        const auto res = ordered_vertex_partitions(g, k);
        require_valid(g, res.partitions);
        const auto& rep = res.report;
        report = {{"segment_lengths", rep.segment_lengths},
                  {"attempted", rep.attempted},
                  {"succeeded", rep.succeeded},
                  {"distinct_sizes", rep.distinct_sizes}};
        doc["value"] = profile_of(res.partitions).size();
        doc["profile"] = tuple_list(profile_of(res.partitions));
      }
      doc["report"] = report;
      if (!report_path.empty()) emit(json{{"schema", "partctl/1"}, {"report", report}}.dump(2) + "\n", report_path);
      std::cout << doc.dump() << '\n';
      return 0;
    }

    if (*family) {
      Graph g;
      if (name == "T_ell")
        g = make_T_ell(ell).graph;
      else if (name == "ternary")
        g = make_complete_ternary(height).graph;
      else if (name == "binary_clique")
        g = make_binary_clique_graph(h1, h2);
      else if (name == "nonmonotone_example") {
        auto ex = make_nonmonotone_example();
        g = minus_e ? without_edge(ex.graph, ex.distinguished) : std::move(ex.graph);
      } else
        g = random_connected_graph(n, m, seed);
      std::ostringstream text;
      text << "# " << name << " average degree " << g.average_degree() << '\n';
      write_graph(text, g);
      emit(text.str(), out_path);
      return 0;
    }

    if (*tseq) {
      const TTable table(max_n);
      std::ostringstream csv;
      if (intervals) {
        csv << "h,lo,hi\n";
        const auto iv = table.intervals();
        for (int h = 0; h <= iv.max_h(); ++h) {
          const Interval x = iv.preimage(h);
          csv << h << ',' << x.lo << ',' << x.hi << '\n';
        }
      } else {
        csv << "n,t\n";
        for (int i = 1; i <= max_n; ++i) csv << i << ',' << table.value(i) << '\n';
      }
      std::cout << csv.str();
      return 0;
    }

    if (*splits) {
      const Graph g = read_graph_file(input);
      const RootedTree t = RootedTree::from_graph(g, root);
      const SplitSequence seq = nested_split_sequence(t);
      if (auto why = check_split_sequence(g, seq, root)) throw CheckFailed(*why);
      json items = json::array();
      for (const auto& s : seq.items)
        items.push_back({{"pivot", s.pivot}, {"a", s.a.to_vector()}, {"b", s.b.to_vector()}});
      json doc{{"schema", "partctl/1"}, {"root", root}, {"length", seq.length()}, {"items", items}};
      std::cout << doc.dump() << '\n';
      return 0;
    }

    if (*tree_p2) {
      const Graph g = read_graph_file(input);
      RootedTree::from_graph(g, 0);  // rejects non-trees
      std::cout << "a,b\n";
      for (const auto& t : tree_exact_P2(g)) std::cout << t[0] << ',' << t[1] << '\n';
      return 0;
    }

    if (*verify) {
      VerifyOptions opt;
      opt.seed = seed;
      opt.count = count;
      opt.budget = budget;
      const VerifyReport rep = run_suite(suite, opt);
      write_table(std::cout, rep);
      if (!out_path.empty()) emit(report_json(rep) + "\n", out_path);
      return rep.passed() ? 0 : kExitCheck;
    }
  } catch (const Error& e) {
    std::cerr << "partctl: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::ParseError: return kExitParse;
      case Errc::TooLarge: return kExitBudget;
      case Errc::UnknownSuite: return kExitUsage;
      default: return 1;
    }
  } catch (const CheckFailed& e) {
    std::cerr << "partctl: internal check failed: " << e.what() << '\n';
    return kExitCheck;
  } catch (const std::exception& e) {
    std::cerr << "partctl: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
