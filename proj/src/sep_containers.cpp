#include "twc/sep_containers.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "twc/minsep_pmc.hpp"

namespace twc {

namespace {

// Union of at most k neighborhoods; absent pivots contribute nothing.
VertexSet pivot_mask(const Graph& g, const std::vector<std::optional<int>>& pivots) {
  VertexSet mask(g.n());
  for (const auto& p : pivots)
    if (p) mask |= g.adj(*p);
  return mask;
}

ProfileClass classify_from_slots(const std::array<bool, kRoleCount>& t) {
  bool p1 = t[A1] || t[B1] || t[R1];
  bool p2 = t[A2] || t[B2] || t[R2];
  bool p3 = t[C1] || t[D1] || t[L1];
  bool p4 = t[C2] || t[D2] || t[L2];
  if (!(p1 && p2 && p3 && p4)) return ProfileClass::NotAProfile;
  bool l_amb = !(t[R1] || t[R2] || t[D1] || t[D2]);
  bool r_amb = !(t[A1] || t[A2] || t[L1] || t[L2]);
  if (l_amb && r_amb) return ProfileClass::BothLR;
  if (l_amb) return ProfileClass::StrictlyL;
  if (r_amb) return ProfileClass::StrictlyR;
  return ProfileClass::Unambiguous;
}

// The container bullets, with the pivot effect supplied as masks so the
// family enumerator can reuse one witness across all pivot choices.
VertexSet assemble_with_masks(const Graph& g, const SeparatorWitness& w, const VertexSet& pl_mask,
                              const VertexSet& pr_mask) {
  auto [z_l, z_r] = measuring_sets(g, w);
  VertexSet zr_avail = z_r - pl_mask;
  VertexSet zl_avail = z_l - pr_mask;
  VertexSet out(g.n());
  out.set(w.roles[B1]);
  out.set(w.roles[B2]);
  out.set(w.roles[C1]);
  out.set(w.roles[C2]);
  for (int v = 0; v < g.n(); ++v) {
    switch (classify_profile(g, w, v)) {
      case ProfileClass::Unambiguous:
        out.set(v);
        break;
      case ProfileClass::StrictlyL:
        if (g.adj(v).intersects(zr_avail)) out.set(v);
        break;
      case ProfileClass::StrictlyR:
        if (g.adj(v).intersects(zl_avail)) out.set(v);
        break;
      case ProfileClass::BothLR:
        if (g.adj(v).intersects(zr_avail) && g.adj(v).intersects(zl_avail)) out.set(v);
        break;
      case ProfileClass::NotAProfile:
        break;
    }
  }
  return out;
}

}  // namespace

std::vector<VertexSet> primitive_family_f0(const Graph& g) {
  std::unordered_set<VertexSet> fam;
  for (int v = 0; v < g.n(); ++v) {
    VertexSet alive = g.vertices() - closed_neighborhood(g, VertexSet(g.n(), {v}));
    for (const auto& c : components_within(g, alive)) fam.insert(open_neighborhood(g, c));
  }
  std::vector<VertexSet> out(fam.begin(), fam.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

VertexSet minimal_dominating_clique_z(const Graph& g, const VertexSet& s, const VertexSet& d) {
  if (!connected_within(g, d) || !open_neighborhood(g, d).contains_all(s))
    throw std::invalid_argument("d must be a full component for s");
  VertexSet z = d;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> members = z.to_vector();
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      int v = *it;
      if (!z.test(v)) continue;
      VertexSet smaller = z;
      smaller.reset(v);
      if (smaller.empty()) continue;
      if (!connected_within(g, smaller)) continue;
      if (!open_neighborhood(g, smaller).contains_all(s)) continue;
      z = std::move(smaller);
      changed = true;
    }
  }
  if (!is_clique(g, z))
    raise(Fail::NotAClique, "dominating set peeled to a non-clique " + z.to_string());
  return z;
}

int private_vertex_f(const Graph& g, const VertexSet& s, const VertexSet& z, int v) {
  for (int x : s) {
    VertexSet seen = g.adj(x) & z;
    if (seen.count() == 1 && seen.test(v)) return x;
  }
  raise(Fail::NoPrivateVertex, "no separator vertex sees only " + std::to_string(v) + " in Z");
}

ProfileClass classify_profile(const Graph& g, const SeparatorWitness& w, int v) {
  std::array<bool, kRoleCount> t{};
  for (int r = 0; r < kRoleCount; ++r) t[r] = g.has_edge(v, w.roles[r]);
  return classify_from_slots(t);
}

std::pair<VertexSet, VertexSet> measuring_sets(const Graph& g, const SeparatorWitness& w) {
  VertexSet z_l(g.n()), z_r(g.n());
  for (int v = 0; v < g.n(); ++v) {
    const auto& nb = g.adj(v);
    if (nb.test(w.roles[D1]) && nb.test(w.roles[D2]) && !nb.test(w.roles[C1]) &&
        !nb.test(w.roles[C2]) && !nb.test(w.roles[L1]) && !nb.test(w.roles[L2]))
      z_r.set(v);
    if (nb.test(w.roles[A1]) && nb.test(w.roles[A2]) && !nb.test(w.roles[B1]) &&
        !nb.test(w.roles[B2]) && !nb.test(w.roles[R1]) && !nb.test(w.roles[R2]))
      z_l.set(v);
  }
  return {z_l, z_r};
}

VertexSet assemble_container(const Graph& g, const SeparatorWitness& w) {
  return assemble_with_masks(g, w, pivot_mask(g, w.pivots_l), pivot_mask(g, w.pivots_r));
}

SeparatorWitness build_separator_witness(const Graph& g, const VertexSet& s, const VertexSet& l,
                                         const VertexSet& r) {
  if (!(open_neighborhood(g, l) == s) || !(open_neighborhood(g, r) == s))
    throw std::invalid_argument("l and r must be full components for s");
  SeparatorWitness w;
  w.s = s;
  w.l_side = l;
  w.r_side = r;
  w.z = minimal_dominating_clique_z(g, s, l);
  w.z_prime = minimal_dominating_clique_z(g, s, r);
  if (w.z.count() < 2 || w.z_prime.count() < 2)
    raise(Fail::PrimitiveSeparator, "dominating clique is a single vertex; use the F0 family");

  w.f.assign(g.n(), -1);
  w.g_map.assign(g.n(), -1);
  for (int zv : w.z) {
    w.f[zv] = private_vertex_f(g, s, w.z, zv);
    w.g_map[zv] = (g.adj(w.f[zv]) & r).first();
  }
  for (int zv : w.z_prime) {
    w.f[zv] = private_vertex_f(g, s, w.z_prime, zv);
    w.g_map[zv] = (g.adj(w.f[zv]) & l).first();
  }

  int a1 = w.z.first(), a2 = w.z.next(a1);
  int d1 = w.z_prime.first(), d2 = w.z_prime.next(d1);
  w.roles[A1] = a1;
  w.roles[A2] = a2;
  w.roles[B1] = w.f[a1];
  w.roles[B2] = w.f[a2];
  w.roles[R1] = w.g_map[a1];
  w.roles[R2] = w.g_map[a2];
  w.roles[D1] = d1;
  w.roles[D2] = d2;
  w.roles[C1] = w.f[d1];
  w.roles[C2] = w.f[d2];
  w.roles[L1] = w.g_map[d1];
  w.roles[L2] = w.g_map[d2];
  return w;
}

namespace {

// Pivot for one color class: vertex of pool with an L-/R-ambiguous profile
// whose neighborhood inside the measuring set is inclusion-maximal among
// such vertices; ties by smallest id; nullopt when no candidate exists.
std::optional<int> choose_pivot(const Graph& g, const SeparatorWitness& w, const VertexSet& pool,
                                const VertexSet& measuring, bool left_side) {
  std::vector<std::pair<int, VertexSet>> cands;
  for (int v : pool) {
    ProfileClass pc = classify_profile(g, w, v);
    bool ambiguous = left_side ? (pc == ProfileClass::StrictlyL || pc == ProfileClass::BothLR)
                               : (pc == ProfileClass::StrictlyR || pc == ProfileClass::BothLR);
    if (ambiguous) cands.push_back({v, g.adj(v) & measuring});
  }
  // candidates are in ascending id order, so the first maximal one wins ties
  for (const auto& [v, nb] : cands) {
    bool dominated = false;
    for (const auto& [u, nb2] : cands)
      if (u != v && nb2.contains_all(nb) && nb2 != nb) {
        dominated = true;
        break;
      }
    if (!dominated) return v;
  }
  return std::nullopt;
}

}  // namespace

VertexSet witness_container_for_separator(const Graph& g, const VertexSet& s, const VertexSet& l,
                                          const VertexSet& r,
                                          const std::vector<VertexSet>& coloring,
                                          const VertexSet& f_vertices) {
  SeparatorWitness w = build_separator_witness(g, s, l, r);
  auto [z_l, z_r] = measuring_sets(g, w);
  for (const auto& cls : coloring) {
    VertexSet pool_l = (cls & f_vertices) - s - r;
    VertexSet pool_r = (cls & f_vertices) - s - l;
    w.pivots_l.push_back(choose_pivot(g, w, pool_l, z_r, /*left_side=*/true));
    w.pivots_r.push_back(choose_pivot(g, w, pool_r, z_l, /*left_side=*/false));
  }
  return assemble_container(g, w);
}

std::vector<VertexSet> enumerate_family_f1(const Graph& g, int k, long long budget) {
  std::unordered_set<VertexSet> fam;
  for (auto& s : primitive_family_f0(g)) fam.insert(std::move(s));

  // masks: every union of at most k vertex neighborhoods (plus the empty
  // union, standing in for absent pivots)
  std::unordered_set<VertexSet> mask_set;
  mask_set.insert(VertexSet(g.n()));
  std::vector<VertexSet> nbhds;
  {
    std::unordered_set<VertexSet> dedup;
    for (int v = 0; v < g.n(); ++v)
      if (dedup.insert(g.adj(v)).second) nbhds.push_back(g.adj(v));
  }
  std::vector<VertexSet> level(mask_set.begin(), mask_set.end());
  for (int round = 0; round < k; ++round) {
    std::vector<VertexSet> next_level;
    for (const auto& m : level)
      for (const auto& nb : nbhds) {
        VertexSet u = m | nb;
        if (mask_set.insert(u).second) next_level.push_back(std::move(u));
      }
    level = std::move(next_level);
    if ((long long)mask_set.size() > budget)
      raise(Fail::BudgetExceeded, "pivot mask space exceeds budget");
  }
  std::vector<VertexSet> masks(mask_set.begin(), mask_set.end());
  std::sort(masks.begin(), masks.end(), canonical_less);

  for (const auto& s : enumerate_minimal_separators(g, budget)) {
    Separation sep = full_components(g, s);
    const auto& fc = sep.full_components;
    for (std::size_t i = 0; i < fc.size(); ++i)
      for (std::size_t j = 0; j < fc.size(); ++j) {
        if (i == j) continue;
        SeparatorWitness w;
        try {
          w = build_separator_witness(g, s, fc[i], fc[j]);
        } catch (const SolverError& e) {
          if (e.kind() == Fail::PrimitiveSeparator) continue;  // F0 covers it
          throw;
        }
        for (const auto& pl : masks)
          for (const auto& pr : masks) {
            fam.insert(assemble_with_masks(g, w, pl, pr));
            if ((long long)fam.size() > budget)
              raise(Fail::BudgetExceeded, "separator container family exceeds budget");
          }
      }
  }

  std::vector<VertexSet> out(fam.begin(), fam.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<VertexSet> family_f1_for_solution(const Graph& g,
                                              const std::vector<VertexSet>& coloring,
                                              const VertexSet& f_vertices, long long budget) {
  std::unordered_set<VertexSet> fam;
  for (auto& s : primitive_family_f0(g)) fam.insert(std::move(s));
  for (const auto& s : enumerate_minimal_separators(g, budget)) {
    Separation sep = full_components(g, s);
    const auto& fc = sep.full_components;
    for (std::size_t i = 0; i < fc.size(); ++i)
      for (std::size_t j = 0; j < fc.size(); ++j) {
        if (i == j) continue;
        try {
          fam.insert(witness_container_for_separator(g, s, fc[i], fc[j], coloring, f_vertices));
        } catch (const SolverError& e) {
          if (e.kind() != Fail::PrimitiveSeparator) throw;  // F0 covers primitive ones
        }
        if ((long long)fam.size() > budget)
          raise(Fail::BudgetExceeded, "witness container family exceeds budget");
      }
  }
  std::vector<VertexSet> out(fam.begin(), fam.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<VertexSet> extend_family_f2(const Graph& g, const std::vector<VertexSet>& f1) {
  std::unordered_set<VertexSet> fam(f1.begin(), f1.end());
  for (const auto& shat : f1)
    for (const auto& d : connected_components(g, shat)) fam.insert(open_neighborhood(g, d));
  std::vector<VertexSet> out(fam.begin(), fam.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace twc
