#include "twc/dp_solver.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "twc/minsep_pmc.hpp"
#include "twc/pmc_containers.hpp"
#include "twc/recognition.hpp"

namespace twc {

namespace {

bool is_forest(const Graph& g) {
  // acyclic iff every component has |E| = |V| - 1
  long long comps = (long long)connected_components(g, VertexSet(g.n())).size();
  return g.m() == g.n() - comps;
}

// Series-parallel style reduction: repeatedly delete degree <= 1 vertices and
// contract degree-2 vertices into an edge between their neighbors. Empties
// exactly the graphs of treewidth <= 2.
bool treewidth_le_2(const Graph& g) {
  std::vector<VertexSet> adj(g.n(), VertexSet(g.n()));
  for (int v = 0; v < g.n(); ++v) adj[v] = g.adj(v);
  VertexSet alive = g.vertices();
  while (!alive.empty()) {
    int pick = -1, deg = -1;
    for (int v : alive) {
      deg = (adj[v] & alive).count();
      if (deg <= 2) {
        pick = v;
        break;
      }
    }
    if (pick == -1) return false;  // min degree >= 3 forces treewidth >= 3
    VertexSet nb = adj[pick] & alive;
    if (deg == 2) {
      int a = nb.first(), b = nb.next(a);
      adj[a].set(b);
      adj[b].set(a);
    }
    alive.reset(pick);
  }
  return true;
}

// Elimination-order DP over vertex subsets: f(S) = best achievable maximum
// elimination degree when S is eliminated first. f(V) is the treewidth.
int treewidth_by_elimination(const Graph& g) {
  const int n = g.n();
  if (n == 0) return -1;
  if (n > 24) raise(Fail::TooLarge, "subset treewidth DP beyond 24 vertices");
  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.adj(v)) adj[v] |= std::uint32_t{1} << u;

  const std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
  std::vector<std::uint8_t> f(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int best = n;
    for (std::uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t prev = mask & ~(std::uint32_t{1} << v);
      // component of v in G[prev ∪ {v}], then its outside neighbors
      std::uint32_t comp = std::uint32_t{1} << v;
      std::uint32_t inside = prev | comp;
      std::uint32_t frontier = comp;
      std::uint32_t reach = 0;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t fr = frontier; fr;) {
          int u = std::countr_zero(fr);
          fr &= fr - 1;
          next |= adj[u];
        }
        reach |= next;
        frontier = next & inside & ~comp;
        comp |= frontier;
      }
      int q = std::popcount(reach & ~inside);
      int val = std::max<int>(f[prev], q);
      best = std::min(best, val);
      if (best == 0) break;
    }
    f[mask] = std::uint8_t(best);
  }
  return f[full];
}

}  // namespace

bool exact_treewidth_le(const Graph& g, int bound) {
  const int n = g.n();
  if (n == 0) return true;
  if (bound < 0) return false;
  if (bound >= n - 1) return true;
  if (bound == 0) return g.m() == 0;
  if (bound == 1) return is_forest(g);
  if (bound == 2) return treewidth_le_2(g);
  if (n > 24) raise(Fail::TooLarge, "exact treewidth beyond 24 vertices");
  return treewidth_by_elimination(g) <= bound;
}

int exact_treewidth(const Graph& g) {
  if (g.n() == 0) return -1;
  if (g.m() == 0) return 0;
  if (is_forest(g)) return 1;
  if (treewidth_le_2(g)) return 2;
  return treewidth_by_elimination(g);
}

bool is_feasible(const Graph& g, int k, const VertexSet& q, const VertexSet& p) {
  assert(!q.intersects(p));
  assert(q.count() <= k);
  auto [h, verts] = induced_subgraph(g, q | p);
  VertexSet qh(h.n());
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (q.test(verts[i])) qh.set(int(i));
  return exact_treewidth_le(complete_on(h, qh), k - 1);
}

VertexSet glue(const VertexSet& q, const std::vector<VertexSet>& parts) {
  VertexSet out = q;
  for (const auto& p : parts) {
    assert(!p.intersects(q));
    out |= p;
  }
  return out;
}

namespace {

struct FeasibilityMemo {
  const Graph& g;
  int k;
  std::unordered_map<std::size_t, std::vector<std::tuple<VertexSet, VertexSet, bool>>> table;

  bool query(const VertexSet& q, const VertexSet& p) {
    std::size_t h = q.hash() * 0x9e3779b97f4a7c15ull + p.hash();
    auto& bucket = table[h];
    for (const auto& [bq, bp, res] : bucket)
      if (bq == q && bp == p) return res;
    bool res = is_feasible(g, k, q, p);
    bucket.push_back({q, p, res});
    return res;
  }
};

void enumerate_q_subsets(const VertexSet& a, int k, std::vector<VertexSet>& out) {
  std::vector<int> elems = a.to_vector();
  VertexSet current(a.universe());
  auto rec = [&](auto&& self, std::size_t from, int left) -> void {
    out.push_back(current);
    if (left == 0) return;
    for (std::size_t i = from; i < elems.size(); ++i) {
      current.set(elems[i]);
      self(self, i + 1, left - 1);
      current.reset(elems[i]);
    }
  };
  rec(rec, 0, std::min<int>(k, (int)elems.size()));
}

}  // namespace

VertexSet solve_with_containers(const Graph& g, const WeightMap& w,
                                const std::vector<VertexSet>& family, int k,
                                const DpOptions& opts) {
  const int n = g.n();
  if ((int)w.size() != n) throw std::invalid_argument("weight map does not cover the graph");
  VertexSet empty(n);
  if (family.empty()) return empty;

  std::vector<VertexSet> fam = family;
  std::sort(fam.begin(), fam.end(), canonical_less);
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());

  struct Pair {
    int a_idx;
    VertexSet q;
  };
  std::vector<std::vector<VertexSet>> comps(fam.size());
  std::vector<Pair> pairs;
  for (std::size_t ai = 0; ai < fam.size(); ++ai) {
    comps[ai] = connected_components(g, fam[ai]);
    std::vector<VertexSet> qs;
    enumerate_q_subsets(fam[ai], k, qs);
    for (auto& q : qs) pairs.push_back({int(ai), std::move(q)});
  }

  // states are (pair, component); Υ values live in one flat table
  std::vector<int> state_offset(pairs.size() + 1, 0);
  for (std::size_t pi = 0; pi < pairs.size(); ++pi)
    state_offset[pi + 1] = state_offset[pi] + int(comps[pairs[pi].a_idx].size());
  const int num_states = state_offset.back();
  std::vector<VertexSet> table(num_states, empty);

  FeasibilityMemo memo{g, k, {}};

  std::vector<int> visit(num_states);
  std::iota(visit.begin(), visit.end(), 0);
  std::vector<int> state_pair(num_states);
  for (std::size_t pi = 0; pi < pairs.size(); ++pi)
    for (int s = state_offset[pi]; s < state_offset[pi + 1]; ++s) state_pair[s] = int(pi);

  std::vector<VertexSet> glued(pairs.size(), empty);
  for (int round = 0; round < n; ++round) {
    // candidates are assembled from a snapshot of the previous round, so the
    // final table does not depend on the visit order within a round
    std::vector<VertexSet> snapshot = table;
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      VertexSet u = pairs[pi].q;
      for (int s = state_offset[pi]; s < state_offset[pi + 1]; ++s) u |= snapshot[s];
      glued[pi] = std::move(u);
    }
    // group pairs by glued value
    std::unordered_map<VertexSet, int> u_index;
    std::vector<VertexSet> u_values;
    std::vector<std::vector<int>> u_pairs;
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
      auto [it, inserted] = u_index.try_emplace(glued[pi], int(u_values.size()));
      if (inserted) {
        u_values.push_back(glued[pi]);
        u_pairs.emplace_back();
      }
      u_pairs[it->second].push_back(int(pi));
    }

    if (opts.shuffle_seed) {
      std::mt19937 rng(opts.shuffle_seed + unsigned(round));
      std::shuffle(visit.begin(), visit.end(), rng);
    }

    bool changed = false;
    VertexSet cand(n), lhs(n), rhs(n);
    for (int sid : visit) {
      int pi = state_pair[sid];
      const VertexSet& a = fam[pairs[pi].a_idx];
      const VertexSet& q = pairs[pi].q;
      const VertexSet& d = comps[pairs[pi].a_idx][sid - state_offset[pi]];
      std::uint64_t best_weight = weight_of(w, table[sid]);
      for (std::size_t ui = 0; ui < u_values.size(); ++ui) {
        cand.assign_and(u_values[ui], d);
        std::uint64_t cw = weight_of(w, cand);
        if (cw < best_weight) continue;
        if (cw == best_weight && !lex_less(cand, table[sid])) continue;
        bool admissible = false;
        for (int pj : u_pairs[ui]) {
          lhs.assign_and(q, fam[pairs[pj].a_idx]);
          rhs.assign_and(pairs[pj].q, a);
          if (lhs == rhs) {
            admissible = true;
            break;
          }
        }
        if (!admissible) continue;
        if (!memo.query(q, cand)) continue;
        table[sid] = cand;
        best_weight = cw;
        changed = true;
      }
    }
    if (opts.validate) {
      for (std::size_t pi = 0; pi < pairs.size(); ++pi)
        for (int s = state_offset[pi]; s < state_offset[pi + 1]; ++s)
          if (!memo.query(pairs[pi].q, table[s]))
            throw std::logic_error("stored table entry lost feasibility");
    }
    if (!changed) break;
  }

  VertexSet best = empty;
  std::vector<VertexSet> parts;
  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    parts.assign(table.begin() + state_offset[pi], table.begin() + state_offset[pi + 1]);
    VertexSet assembled = glue(pairs[pi].q, parts);
    if (!memo.query(pairs[pi].q, assembled - pairs[pi].q))
      throw std::logic_error("final assembly is infeasible");
    if (prec_less(assembled, best, w)) best = assembled;
  }
  return best;
}

VertexSet solve_tw_subgraph(const Graph& g, const WeightMap& w, int k, FamilyStrategy strategy,
                            const std::vector<VertexSet>* explicit_family, long long budget) {
  const int n = g.n();
  if ((int)w.size() != n) throw std::invalid_argument("weight map does not cover the graph");
  if (k >= n) {
    // one bag holds everything; the canonical optimum keeps exactly the
    // positive-weight vertices
    VertexSet out(n);
    for (int v = 0; v < n; ++v)
      if (w[v] > 0) out.set(v);
    return out;
  }
  std::vector<VertexSet> family;
  switch (strategy) {
    case FamilyStrategy::AllPmcs: {
      for (auto& rec : enumerate_pmcs(g, budget)) family.push_back(std::move(rec.omega));
      break;
    }
    case FamilyStrategy::ClassCFamily:
      family = container_family(g, k, budget);
      break;
    case FamilyStrategy::ExplicitFamily:
      if (!explicit_family) throw std::invalid_argument("explicit family missing");
      family = *explicit_family;
      break;
  }
  return solve_with_containers(g, w, family, k);
}

VertexSet solve_mwis(const Graph& g, const WeightMap& w) {
  ClassReport r = classify(g);
  if (!r.is_long_hole_free)
    raise(Fail::NotLongHoleFree, "input has an induced cycle of length at least 5");
  FamilyStrategy strategy = g.n() <= 22 ? FamilyStrategy::AllPmcs : FamilyStrategy::ClassCFamily;
  return solve_tw_subgraph(g, w, 1, strategy);
}

VertexSet solve_fvs(const Graph& g) {
  ClassReport r = classify(g);
  if (!r.is_p5_free) raise(Fail::NotP5Free, "input has an induced path on 5 vertices");
  WeightMap unit(g.n(), 1);
  FamilyStrategy strategy = g.n() <= 22 ? FamilyStrategy::AllPmcs : FamilyStrategy::ClassCFamily;
  VertexSet forest = solve_tw_subgraph(g, unit, 2, strategy);
  return g.vertices() - forest;
}

}  // namespace twc
