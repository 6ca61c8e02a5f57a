#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "twc/graph.hpp"

namespace twc {

struct Instance {
  Graph graph;
  WeightMap weights;  // covers every vertex; default weight 1
  std::string name;
};

// Text format: line 1 "n m"; then m lines "u v" with 0 <= u < v < n; then
// optional lines "w i value". Anything else is rejected with ParseError.
Instance parse_instance(std::istream& in, const std::string& name);
Instance load_instance(const std::string& path);
void write_instance(std::ostream& out, const Instance& inst);

// One set per line as sorted space-separated ids over universe n.
std::vector<VertexSet> parse_family(std::istream& in, int n);
std::vector<VertexSet> load_family(const std::string& path, int n);

}  // namespace twc
