#include "twc/recognition.hpp"

#include <algorithm>
#include <stdexcept>

namespace twc {

namespace {

// BFS shortest path from s to t inside G[allowed]; returns the vertex list
// s..t or empty. Parents are chosen by ascending discovery, so the path is
// deterministic.
std::vector<int> shortest_path_within(const Graph& g, const VertexSet& allowed, int s, int t) {
  std::vector<int> parent(g.n(), -1);
  std::vector<int> queue;
  queue.push_back(s);
  parent[s] = s;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    if (u == t) break;
    VertexSet nb = g.adj(u) & allowed;
    for (int v : nb) {
      if (parent[v] == -1) {
        parent[v] = u;
        queue.push_back(v);
      }
    }
  }
  if (parent[t] == -1) return {};
  std::vector<int> path;
  for (int v = t; v != s; v = parent[v]) path.push_back(v);
  path.push_back(s);
  std::reverse(path.begin(), path.end());
  return path;
}

// Enumerates induced paths p1..pk with p1 < pk, ascending at every level, and
// calls fn on each; fn returning true stops the search.
template <typename Fn>
bool for_each_induced_path(const Graph& g, int k, Fn&& fn) {
  std::vector<int> path(k);
  VertexSet used(g.n());
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == k) {
      if (path[0] > path[k - 1]) return false;
      return fn(path);
    }
    VertexSet cand = g.adj(path[depth - 1]);
    // induced: next vertex sees only the previous one among chosen vertices
    for (int i = 0; i + 1 < depth; ++i) cand -= g.adj(path[i]);
    cand -= used;
    for (int v : cand) {
      path[depth] = v;
      used.set(v);
      if (self(self, depth + 1)) return true;
      used.reset(v);
    }
    return false;
  };
  for (int v0 = 0; v0 < g.n(); ++v0) {
    path[0] = v0;
    used.set(v0);
    if (rec(rec, 1)) return true;
    used.reset(v0);
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced_path(const Graph& g, int k) {
  std::optional<std::vector<int>> out;
  for_each_induced_path(g, k, [&](const std::vector<int>& p) {
    out = p;
    return true;
  });
  return out;
}

std::optional<std::vector<int>> find_long_hole(const Graph& g, int min_len) {
  if (min_len != 5 && min_len != 6) throw std::invalid_argument("min_len must be 5 or 6");
  // Every hole of length >= min_len contains min_len-1 consecutive vertices
  // forming an induced path; the rest of the hole is a path between its
  // endpoints avoiding the interior's closed neighborhoods.
  const int plen = min_len - 1;
  std::optional<std::vector<int>> out;
  for_each_induced_path(g, plen, [&](const std::vector<int>& p) {
    VertexSet blocked(g.n());
    for (int i = 1; i + 1 < plen; ++i) blocked |= closed_neighborhood(g, VertexSet(g.n(), {p[i]}));
    blocked.reset(p[0]);
    blocked.reset(p[plen - 1]);
    VertexSet allowed = g.vertices() - blocked;
    std::vector<int> closing = shortest_path_within(g, allowed, p[plen - 1], p[0]);
    if (closing.empty()) return false;
    // cycle = p1..p_plen followed by the closing path's interior
    std::vector<int> cycle(p.begin(), p.end());
    for (std::size_t i = 1; i + 1 < closing.size(); ++i) cycle.push_back(closing[i]);
    out = cycle;
    return true;
  });
  return out;
}

std::optional<std::vector<int>> find_extended_c5(const Graph& g) {
  const int n = g.n();
  for (int h1 = 0; h1 < n; ++h1) {
    VertexSet n1 = g.adj(h1);
    for (int h2 : n1) {
      for (int h3 : g.adj(h2) - closed_neighborhood(g, VertexSet(n, {h1}))) {
        VertexSet cand4 = g.adj(h3) - closed_neighborhood(g, VertexSet(n, {h1}));
        cand4 -= g.adj(h2);
        for (int h4 : cand4) {
          VertexSet cand5 = g.adj(h4) & n1;
          cand5 -= g.adj(h2);
          cand5 -= g.adj(h3);
          for (int h5 : cand5) {
            if (h5 == h2 || h5 < h2) continue;  // fix cycle orientation
            if (h1 > h2 || h1 > h3 || h1 > h4 || h1 > h5) continue;
            VertexSet hole(n, {h1, h2, h3, h4, h5});
            int ring[5] = {h1, h2, h3, h4, h5};
            for (int x = 0; x < n; ++x) {
              if (hole.test(x)) continue;
              VertexSet t = g.adj(x) & hole;
              int c = t.count();
              if (c == 1) return std::vector<int>{h1, h2, h3, h4, h5, x};
              if (c == 2) {
                int a = t.first(), b = t.next(a);
                int ia = -1, ib = -1;
                for (int i = 0; i < 5; ++i) {
                  if (ring[i] == a) ia = i;
                  if (ring[i] == b) ib = i;
                }
                int d = (ia - ib + 5) % 5;
                if (d == 1 || d == 4) return std::vector<int>{h1, h2, h3, h4, h5, x};
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

ClassReport classify(const Graph& g) {
  ClassReport r;
  r.long_hole = find_long_hole(g, 6);
  r.extended_c5 = find_extended_c5(g);
  r.in_class_c = !r.long_hole && !r.extended_c5;
  r.is_long_hole_free = !find_long_hole(g, 5).has_value();
  r.p5 = find_induced_path(g, 5);
  r.is_p5_free = !r.p5;
  return r;
}

std::vector<VertexSet> degeneracy_coloring_within(const Graph& g, const VertexSet& inside) {
  auto [h, verts] = induced_subgraph(g, inside);
  std::vector<VertexSet> out;
  for (const auto& cls : degeneracy_coloring(h)) {
    VertexSet mapped(g.n());
    for (int v : cls) mapped.set(verts[v]);
    out.push_back(std::move(mapped));
  }
  return out;
}

std::vector<VertexSet> degeneracy_coloring(const Graph& g) {
  const int n = g.n();
  // smallest-last order: repeatedly remove a minimum-degree vertex (ties by id)
  std::vector<int> order;
  order.reserve(n);
  VertexSet left = g.vertices();
  while (!left.empty()) {
    int best = -1, bestdeg = n + 1;
    for (int v : left) {
      int d = (g.adj(v) & left).count();
      if (d < bestdeg) {
        bestdeg = d;
        best = v;
      }
    }
    order.push_back(best);
    left.reset(best);
  }
  std::reverse(order.begin(), order.end());

  std::vector<int> color(n, -1);
  int maxcolor = -1;
  for (int v : order) {
    std::vector<bool> taken(n + 1, false);
    for (int u : g.adj(v))
      if (color[u] >= 0) taken[color[u]] = true;
    int c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    maxcolor = std::max(maxcolor, c);
  }

  std::vector<VertexSet> classes(maxcolor + 1, VertexSet(n));
  for (int v = 0; v < n; ++v)
    if (color[v] >= 0) classes[color[v]].set(v);
  std::erase_if(classes, [](const VertexSet& s) { return s.empty(); });
  std::sort(classes.begin(), classes.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  return classes;
}

}  // namespace twc
