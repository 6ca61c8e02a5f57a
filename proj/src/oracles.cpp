#include "twc/oracles.hpp"

#include <algorithm>
#include <unordered_set>

#include "twc/dp_solver.hpp"

namespace twc {

VertexSet brute_tw_subgraph(const Graph& g, const WeightMap& w, int k) {
  const int n = g.n();
  if (n > 16) raise(Fail::TooLarge, "subset scan beyond 16 vertices");
  VertexSet best(n);
  VertexSet cand(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    cand.clear();
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) cand.set(v);
    auto [h, verts] = induced_subgraph(g, cand);
    if (!exact_treewidth_le(h, k - 1)) continue;
    if (prec_less(cand, best, w)) best = cand;
  }
  return best;
}

bool is_chordal(const Graph& g) {
  const int n = g.n();
  // maximum cardinality search; the reverse order is a perfect elimination
  // order iff the graph is chordal
  std::vector<int> weight(n, 0), pos(n, -1), order(n, -1);
  VertexSet left = g.vertices();
  for (int i = n - 1; i >= 0; --i) {
    int best = -1;
    for (int v : left)
      if (best == -1 || weight[v] > weight[best]) best = v;
    order[i] = best;
    pos[best] = i;
    left.reset(best);
    for (int u : g.adj(best))
      if (left.test(u)) ++weight[u];
  }
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    int parent = -1;
    for (int u : g.adj(v))
      if (pos[u] > i && (parent == -1 || pos[u] < pos[parent])) parent = u;
    if (parent == -1) continue;
    for (int u : g.adj(v))
      if (pos[u] > i && u != parent && !g.has_edge(parent, u)) return false;
  }
  return true;
}

namespace {

std::vector<VertexSet> maximal_cliques_of_chordal(const Graph& g) {
  const int n = g.n();
  // same MCS machinery: bags v ∪ later-neighbors, then keep ⊆-maximal ones
  std::vector<int> weight(n, 0), pos(n, -1), order(n, -1);
  VertexSet left = g.vertices();
  for (int i = n - 1; i >= 0; --i) {
    int best = -1;
    for (int v : left)
      if (best == -1 || weight[v] > weight[best]) best = v;
    order[i] = best;
    pos[best] = i;
    left.reset(best);
    for (int u : g.adj(best))
      if (left.test(u)) ++weight[u];
  }
  std::vector<VertexSet> bags;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    VertexSet bag(n);
    bag.set(v);
    for (int u : g.adj(v))
      if (pos[u] > i) bag.set(u);
    bags.push_back(std::move(bag));
  }
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < bags.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < bags.size(); ++j)
      if (i != j && bags[j].contains_all(bags[i]) && !(bags[i] == bags[j])) {
        maximal = false;
        break;
      }
    if (maximal && std::find(out.begin(), out.end(), bags[i]) == out.end())
      out.push_back(bags[i]);
  }
  return out;
}

}  // namespace

std::vector<VertexSet> brute_pmcs_by_definition(const Graph& g) {
  const int n = g.n();
  if (n > 7) raise(Fail::TooLarge, "definition oracle beyond 7 vertices");

  std::vector<std::pair<int, int>> nonedges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) nonedges.push_back({u, v});
  const int ne = int(nonedges.size());

  // ascending fill size; a chordal fill with no smaller chordal fill below it
  // is an inclusion-minimal completion
  std::vector<std::uint32_t> minimal_fills;
  std::vector<std::pair<int, int>> base_edges = g.edges();
  for (int size = 0; size <= ne; ++size) {
    std::uint32_t mask = (size == 0) ? 0 : (std::uint32_t{1} << size) - 1;
    while (true) {
      bool dominated = false;
      for (std::uint32_t fill : minimal_fills)
        if ((fill & mask) == fill) {
          dominated = true;
          break;
        }
      if (!dominated) {
        std::vector<std::pair<int, int>> es = base_edges;
        for (int b = 0; b < ne; ++b)
          if ((mask >> b) & 1) es.push_back(nonedges[b]);
        if (is_chordal(Graph(n, es))) minimal_fills.push_back(mask);
      }
      if (size == 0) break;
      // Gosper: next mask with the same popcount
      std::uint32_t c = mask & -mask, r = mask + c;
      std::uint32_t next = (((r ^ mask) >> 2) / c) | r;
      if (next >= (std::uint32_t{1} << ne)) break;
      mask = next;
    }
  }

  std::unordered_set<VertexSet> pmcs;
  for (std::uint32_t fill : minimal_fills) {
    std::vector<std::pair<int, int>> es = base_edges;
    for (int b = 0; b < ne; ++b)
      if ((fill >> b) & 1) es.push_back(nonedges[b]);
    for (auto& clique : maximal_cliques_of_chordal(Graph(n, es))) pmcs.insert(std::move(clique));
  }
  std::vector<VertexSet> out(pmcs.begin(), pmcs.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::uint64_t brute_mwis_weight(const Graph& g, const WeightMap& w) {
  const int n = g.n();
  if (n > 20) raise(Fail::TooLarge, "subset scan beyond 20 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.adj(v)) adj[v] |= std::uint32_t{1} << u;
  std::uint64_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool independent = true;
    std::uint64_t total = 0;
    for (std::uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[v] & mask) {
        independent = false;
        break;
      }
      total += w[v];
    }
    if (independent) best = std::max(best, total);
  }
  return best;
}

int brute_max_induced_forest_size(const Graph& g) {
  const int n = g.n();
  if (n > 20) raise(Fail::TooLarge, "subset scan beyond 20 vertices");
  int best = 0;
  std::vector<int> parent(n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    // union-find acyclicity over the induced edges
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    bool acyclic = true;
    for (int v = 0; v < n && acyclic; ++v) {
      if (!((mask >> v) & 1)) continue;
      for (int u = g.adj(v).next(v); u != -1; u = g.adj(v).next(u)) {
        if (!((mask >> u) & 1)) continue;
        int rv = find(v), ru = find(u);
        if (rv == ru) {
          acyclic = false;
          break;
        }
        parent[rv] = ru;
      }
    }
    if (acyclic) best = size;
  }
  return best;
}

}  // namespace twc
