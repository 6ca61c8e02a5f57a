#pragma once

#include <vector>

#include "twc/errors.hpp"
#include "twc/graph.hpp"

namespace twc {

// Deletion order along which a PMC stays a PMC in every prefix-deleted graph.
struct SurvivalSequence {
  std::vector<int> order;
  VertexSet end_pmc;  // PMC of G - order
};

// Component D of G - omega with j ⊆ N(D); smallest canonical such D.
// Requires omega to be a PMC and j ⊆ omega an independent set, |j| > 1.
VertexSet covering_component(const Graph& g, const VertexSet& omega, const VertexSet& j);

// Pair (D1, D2), possibly equal, with v ∈ N(D1) ∩ N(D2) and
// omega \ N(v) ⊆ N(D1) ∪ N(D2); smallest canonical pair.
std::pair<VertexSet, VertexSet> two_covering_components(const Graph& g, const VertexSet& omega,
                                                        int v);

// Container for a PMC with an adhesion outside f2: union of containers for
// the four separators produced by two_covering_components at z_l and z_r,
// plus N(z_l) ∩ N(z_r).
VertexSet impure_pmc_container(const Graph& g, const VertexSet& omega,
                               const std::vector<VertexSet>& f2, const VertexSet& f_vertices,
                               const std::vector<VertexSet>& coloring);

// The unique PMC of G for which `order` is a survival sequence ending in
// end_pmc (a PMC of G - order). Walks the order backwards, keeping the
// current set when it stays a PMC, otherwise absorbing the reinserted vertex.
VertexSet pmc_lift(const Graph& g, const std::vector<int>& order, const VertexSet& end_pmc);

bool is_survival_sequence(const Graph& g, const std::vector<int>& order, const VertexSet& omega);

// The recovery family: lifting the empty PMC through the full ascending
// vertex order, plus all lifted single-component and four-component
// candidates over every prefix. Contains every PMC whose components all
// lie in y_family.
std::vector<VertexSet> x_rec(const Graph& g, const std::vector<VertexSet>& y_family,
                             long long budget);

// Combined family: x_rec over the components of F2 members, plus the
// unions of at most four F2 members with a common neighborhood attached.
// Satisfies the container promise for every PMC and every k-colorable
// induced subgraph when budgets are not hit. Requires g in class C.
std::vector<VertexSet> container_family(const Graph& g, int k, long long budget);

// { A \ B : A in family, B ⊆ A, |B| <= p }, deduplicated.
std::vector<VertexSet> strip_containers(const std::vector<VertexSet>& family, int p, int n);

}  // namespace twc
