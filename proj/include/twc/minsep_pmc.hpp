#pragma once

#include <vector>

#include "twc/errors.hpp"
#include "twc/graph.hpp"

namespace twc {

// Components of G - s split by fullness: C is full when N(C) = s.
// s is a minimal separator iff at least two components are full.
struct Separation {
  VertexSet s;
  std::vector<VertexSet> full_components;
  std::vector<VertexSet> other_components;
};

// A potential maximal clique with its adhesions N(D), one per component D of
// G - omega, in canonical component order.
struct PmcRecord {
  VertexSet omega;
  std::vector<VertexSet> adhesions;
};

Separation full_components(const Graph& g, const VertexSet& s);

bool is_minimal_separator(const Graph& g, const VertexSet& s);

// All minimal separators via neighborhood-expansion closure: seed with
// N(C) for C in cc(G - N[v]) over all v, then expand each found S by
// N(C) for C in cc(G - (S ∪ N[x])), x in S, until fixpoint.
// Throws BudgetExceeded when more than budget separators are found.
std::vector<VertexSet> enumerate_minimal_separators(const Graph& g, long long budget);

// Cover/strict-neighborhood PMC test: every non-edge of omega is covered by
// some component of G - omega, and N(D) is a proper subset of omega for all
// components D.
bool is_pmc(const Graph& g, const VertexSet& omega);

// Same test inside G[alive]. The empty set is a PMC only of the empty graph.
bool is_pmc_within(const Graph& g, const VertexSet& alive, const VertexSet& omega);

// Oracle-grade subset scan (n <= 22); canonical order.
std::vector<PmcRecord> enumerate_pmcs(const Graph& g, long long budget);

// N(D) for each component of G - omega; requires is_pmc(g, omega).
std::vector<VertexSet> adhesions(const Graph& g, const VertexSet& omega);

}  // namespace twc
