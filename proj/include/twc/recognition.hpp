#pragma once

#include <optional>
#include <vector>

#include "twc/graph.hpp"

namespace twc {

// Recognition report for the hereditary classes the solvers support.
// in_class_c: no induced hole of length >= 6 and no induced extended C5.
// is_long_hole_free: no induced cycle of length >= 5.
// Witness lists, when present, induce exactly the claimed pattern.
struct ClassReport {
  bool in_class_c = false;
  bool is_long_hole_free = false;
  bool is_p5_free = false;
  std::optional<std::vector<int>> long_hole;     // induced cycle, length >= 6
  std::optional<std::vector<int>> extended_c5;   // h1..h5, x
  std::optional<std::vector<int>> p5;            // induced path on 5 vertices
};

// Induced cycle of length >= min_len (min_len in {5,6}), or nullopt.
// Finds an induced P(min_len-1) and closes it with a shortest path that
// avoids the interior's neighborhoods; exact for these two thresholds.
std::optional<std::vector<int>> find_long_hole(const Graph& g, int min_len);

// (h1..h5, x) where h1..h5 induce a C5 and x attaches to one hole vertex or
// two consecutive ones; nullopt if no induced extended C5 exists.
std::optional<std::vector<int>> find_extended_c5(const Graph& g);

// First induced path on k vertices in ascending enumeration order, or nullopt.
std::optional<std::vector<int>> find_induced_path(const Graph& g, int k);

ClassReport classify(const Graph& g);

// Greedy coloring along a smallest-last order. Uses at most degeneracy+1
// colors, so a graph of treewidth < k gets at most k classes. Classes are
// returned ascending by smallest element, empty classes omitted.
std::vector<VertexSet> degeneracy_coloring(const Graph& g);

// degeneracy_coloring of G[inside], with classes expressed over the original
// vertex ids.
std::vector<VertexSet> degeneracy_coloring_within(const Graph& g, const VertexSet& inside);

}  // namespace twc
