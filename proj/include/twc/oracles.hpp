#pragma once

#include <vector>

#include "twc/errors.hpp"
#include "twc/graph.hpp"

namespace twc {

// Full subset scan for the ≺-minimum maximum-weight set inducing treewidth
// < k; n <= 16. The weight/canonical reference the DP is tested against.
VertexSet brute_tw_subgraph(const Graph& g, const WeightMap& w, int k);

// PMCs straight from the definition: enumerate minimal chordal completions
// over the non-edge lattice (ascending fill size with domination pruning)
// and collect the maximal cliques of each completed graph; n <= 7.
std::vector<VertexSet> brute_pmcs_by_definition(const Graph& g);

// Independent simple scans, used to cross-check the tw-based solvers without
// touching the treewidth machinery.
std::uint64_t brute_mwis_weight(const Graph& g, const WeightMap& w);
int brute_max_induced_forest_size(const Graph& g);

bool is_chordal(const Graph& g);

}  // namespace twc
