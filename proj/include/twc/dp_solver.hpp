#pragma once

#include <vector>

#include "twc/errors.hpp"
#include "twc/graph.hpp"

namespace twc {

// DP state: container A from the supplied family, intended solution trace
// Q ⊆ A with |Q| <= k, and a component D of G - A.
struct DpState {
  VertexSet a;
  VertexSet q;
  VertexSet d;
};

struct DpOptions {
  // Nonzero: permute the state visit order inside each round. The result is
  // visit-order invariant; the option exists so tests can demonstrate that.
  unsigned shuffle_seed = 0;
  // Re-check every stored table entry for feasibility at round boundaries.
  bool validate = false;
};

// Exact treewidth; -1 for the empty graph. General path is the elimination
// -order subset DP, n <= 24.
int exact_treewidth(const Graph& g);

// treewidth(g) <= bound. bound <= 2 uses linear special cases (edgeless,
// forest, series-parallel reduction); otherwise the subset DP.
bool exact_treewidth_le(const Graph& g, int bound);

// Whether G[p ∪ q] has a tree decomposition of width < k with q inside one
// bag; tested as treewidth(complete_on(G[p ∪ q], q)) <= k-1.
bool is_feasible(const Graph& g, int k, const VertexSet& q, const VertexSet& p);

// q ∪ ⋃ parts; parts must be pairwise disjoint from q.
VertexSet glue(const VertexSet& q, const std::vector<VertexSet>& parts);

// The round DP over a container family. When the family contains an
// F-container for every PMC (with F the ≺-minimum optimum) the result is the
// ≺-minimum maximum-weight vertex set inducing a subgraph of treewidth < k.
// An empty family yields the empty set.
VertexSet solve_with_containers(const Graph& g, const WeightMap& w,
                                const std::vector<VertexSet>& family, int k,
                                const DpOptions& opts = {});

enum class FamilyStrategy { AllPmcs, ClassCFamily, ExplicitFamily };

VertexSet solve_tw_subgraph(const Graph& g, const WeightMap& w, int k, FamilyStrategy strategy,
                            const std::vector<VertexSet>* explicit_family = nullptr,
                            long long budget = 2'000'000);

// Maximum-weight independent set on long-hole-free graphs (treewidth < 1).
VertexSet solve_mwis(const Graph& g, const WeightMap& w);

// Minimum feedback vertex set on P5-free graphs: complement of the canonical
// maximum induced forest (treewidth < 2, unit weights).
VertexSet solve_fvs(const Graph& g);

}  // namespace twc
