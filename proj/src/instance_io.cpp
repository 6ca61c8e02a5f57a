#include "twc/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "twc/errors.hpp"

namespace twc {

namespace {

bool nonblank(const std::string& line) {
  return line.find_first_not_of(" \t\r") != std::string::npos;
}

}  // namespace

Instance parse_instance(std::istream& in, const std::string& name) {
  std::string line;
  long long n = -1, m = -1;
  while (std::getline(in, line) && !nonblank(line)) {
  }
  {
    std::istringstream head(line);
    std::string extra;
    if (!(head >> n >> m) || (head >> extra) || n < 0 || m < 0)
      raise(Fail::ParseError, "expected header 'n m'");
  }
  std::vector<std::pair<int, int>> edges;
  WeightMap weights(std::size_t(n), 1);
  long long edges_read = 0;
  while (std::getline(in, line)) {
    if (!nonblank(line)) continue;
    std::istringstream ls(line);
    std::string tok;
    ls >> tok;
    if (tok == "w") {
      long long i, value;
      std::string extra;
      if (!(ls >> i >> value) || (ls >> extra) || i < 0 || i >= n || value < 0)
        raise(Fail::ParseError, "bad weight line: " + line);
      weights[std::size_t(i)] = std::uint64_t(value);
      continue;
    }
    long long u, v;
    std::string extra;
    std::istringstream es(line);
    if (!(es >> u >> v) || (es >> extra)) raise(Fail::ParseError, "unrecognized line: " + line);
    if (u < 0 || v <= u || v >= n) raise(Fail::ParseError, "edge must satisfy 0 <= u < v < n: " + line);
    if (++edges_read > m) raise(Fail::ParseError, "more edges than declared");
    edges.push_back({int(u), int(v)});
  }
  if (edges_read != m) raise(Fail::ParseError, "fewer edges than declared");
  try {
    return Instance{Graph(int(n), edges), std::move(weights), name};
  } catch (const std::invalid_argument& e) {
    raise(Fail::ParseError, e.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Fail::ParseError, "cannot open " + path);
  return parse_instance(in, path);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << inst.graph.n() << ' ' << inst.graph.m() << '\n';
  for (auto [u, v] : inst.graph.edges()) out << u << ' ' << v << '\n';
  for (int v = 0; v < inst.graph.n(); ++v)
    if (inst.weights[v] != 1) out << "w " << v << ' ' << inst.weights[v] << '\n';
}

std::vector<VertexSet> parse_family(std::istream& in, int n) {
  std::vector<VertexSet> fam;
  std::string line;
  while (std::getline(in, line)) {
    if (!nonblank(line)) continue;
    std::istringstream ls(line);
    VertexSet s(n);
    long long v;
    while (ls >> v) {
      if (v < 0 || v >= n) raise(Fail::ParseError, "family vertex out of range: " + line);
      s.set(int(v));
    }
    if (!ls.eof()) raise(Fail::ParseError, "unrecognized family line: " + line);
    fam.push_back(std::move(s));
  }
  return fam;
}

std::vector<VertexSet> load_family(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) raise(Fail::ParseError, "cannot open " + path);
  return parse_family(in, n);
}

}  // namespace twc
