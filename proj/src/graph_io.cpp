#include "partctl/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace partctl {

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw Error(Errc::ParseError, "missing header");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra) || n < 0 || m < 0)
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected \"n m\"");
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, lineno))
      throw Error(Errc::ParseError, "expected " + std::to_string(m) + " edges, got " +
                                        std::to_string(i));
    std::istringstream es(line);
    long long u, v;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra))
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected \"u v\"");
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_content_line(in, line, lineno))
    throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": trailing content");
  try {
    return build_graph(static_cast<int>(n), pairs);
  } catch (const Error& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path);
  write_graph(out, g);
}

}  // namespace partctl
