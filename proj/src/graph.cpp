#include "twc/graph.hpp"

#include <stdexcept>

namespace twc {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(n_, VertexSet(n_));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (adj_[u].test(v)) throw std::invalid_argument("duplicate edge");
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
  }
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(std::size_t(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.push_back({u, v});
  return out;
}

std::uint64_t weight_of(const WeightMap& w, const VertexSet& s) {
  std::uint64_t total = 0;
  for (int v : s) total += w[v];
  return total;
}

bool prec_less(const VertexSet& a, const VertexSet& b, const WeightMap& w) {
  std::uint64_t wa = weight_of(w, a), wb = weight_of(w, b);
  if (wa != wb) return wa > wb;
  return lex_less(a, b);
}

VertexSet open_neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet nb(g.n());
  for (int v : x) nb |= g.adj(v);
  nb -= x;
  return nb;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
  VertexSet nb(g.n());
  for (int v : x) nb |= g.adj(v);
  nb |= x;
  return nb;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& alive) {
  std::vector<VertexSet> comps;
  VertexSet left = alive;
  for (int seed = left.first(); seed != -1; seed = left.first()) {
    VertexSet comp(g.n());
    VertexSet frontier(g.n());
    frontier.set(seed);
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.n());
      for (int v : frontier) next |= g.adj(v);
      next &= alive;
      next -= comp;
      frontier = std::move(next);
    }
    left -= comp;
    comps.push_back(std::move(comp));
  }
  return comps;  // seeds taken ascending, so components sort by min element
}

bool connected_within(const Graph& g, const VertexSet& alive) {
  int seed = alive.first();
  if (seed == -1) return true;
  VertexSet comp(g.n());
  VertexSet frontier(g.n());
  frontier.set(seed);
  while (!frontier.empty()) {
    comp |= frontier;
    VertexSet next(g.n());
    for (int v : frontier) next |= g.adj(v);
    next &= alive;
    next -= comp;
    frontier = std::move(next);
  }
  return comp == alive;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed) {
  return components_within(g, g.vertices() - removed);
}

VertexSet neighborhood_within(const Graph& g, const VertexSet& alive, const VertexSet& x) {
  VertexSet nb(g.n());
  for (int v : x) nb |= g.adj(v);
  nb &= alive;
  nb -= x;
  return nb;
}

bool is_clique(const Graph& g, const VertexSet& x) {
  for (int v : x) {
    VertexSet rest = x;
    rest.reset(v);
    if (!g.adj(v).contains_all(rest)) return false;
  }
  return true;
}

Graph complete_on(const Graph& g, const VertexSet& q) {
  std::vector<std::pair<int, int>> es = g.edges();
  for (int u : q)
    for (int v = q.next(u); v != -1; v = q.next(v))
      if (!g.has_edge(u, v)) es.push_back({u, v});
  return Graph(g.n(), es);
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> verts = keep.to_vector();
  std::vector<int> rank(g.n(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) rank[verts[i]] = int(i);
  std::vector<std::pair<int, int>> es;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    VertexSet nb = g.adj(verts[i]) & keep;
    for (int u = nb.next(verts[i]); u != -1; u = nb.next(u)) es.push_back({int(i), rank[u]});
  }
  return {Graph(int(verts.size()), es), std::move(verts)};
}

}  // namespace twc
