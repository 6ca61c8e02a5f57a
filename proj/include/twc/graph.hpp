#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twc/vertex_set.hpp"

namespace twc {

// Per-vertex non-negative integer weights. Totals over any vertex subset are
// assumed to fit in 64 bits (input precondition).
using WeightMap = std::vector<std::uint64_t>;

// Immutable simple undirected graph with dense adjacency rows. Vertex ids are
// 0..n-1; every canonical order in the library derives from ascending ids.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  long long m() const { return m_; }

  const VertexSet& adj(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }

  VertexSet vertices() const { return VertexSet::all(n_); }
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<VertexSet> adj_;
};

std::uint64_t weight_of(const WeightMap& w, const VertexSet& s);

// Canonical order ≺ on solutions: higher total weight first, ties broken by
// lex_less on characteristic vectors. a ≺ b means a is strictly better.
bool prec_less(const VertexSet& a, const VertexSet& b, const WeightMap& w);

// N(X): vertices outside X with a neighbor in X.
VertexSet open_neighborhood(const Graph& g, const VertexSet& x);

// N[X] = N(X) ∪ X.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& x);

// Connected components of G - removed, ascending by smallest element.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed);

bool is_clique(const Graph& g, const VertexSet& x);

// Copy of g with all missing edges inside q added.
Graph complete_on(const Graph& g, const VertexSet& q);

// --- induced-subgraph views -------------------------------------------------
// Deletion sequences G_s = G - X_s are realized by passing an "alive" mask
// instead of rebuilding graphs; these are the masked twins of the operations
// above, working inside G[alive].

VertexSet neighborhood_within(const Graph& g, const VertexSet& alive, const VertexSet& x);
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& alive);
bool connected_within(const Graph& g, const VertexSet& alive);

// Relabeled copy of G[keep]: vertex i of the result is the i-th smallest
// member of keep. Returns the graph and the keep-elements in order.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace twc
