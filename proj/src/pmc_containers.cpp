#include "twc/pmc_containers.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "twc/minsep_pmc.hpp"
#include "twc/recognition.hpp"
#include "twc/sep_containers.hpp"

namespace twc {

VertexSet covering_component(const Graph& g, const VertexSet& omega, const VertexSet& j) {
  if (!is_pmc(g, omega)) raise(Fail::NotAPmc, "covering_component needs a PMC");
  if (j.count() <= 1) raise(Fail::JNotIndependent, "need at least two vertices");
  if (!omega.contains_all(j)) raise(Fail::JNotIndependent, "J must lie inside the PMC");
  for (int x : j) {
    VertexSet rest = j;
    rest.reset(x);
    if (g.adj(x).intersects(rest)) raise(Fail::JNotIndependent, "J has an internal edge");
  }
  for (const auto& d : connected_components(g, omega))
    if (open_neighborhood(g, d).contains_all(j)) return d;
  raise(Fail::NoCoveringComponent, "no component covers " + j.to_string());
}

std::pair<VertexSet, VertexSet> two_covering_components(const Graph& g, const VertexSet& omega,
                                                        int v) {
  if (!is_pmc(g, omega)) raise(Fail::NotAPmc, "two_covering_components needs a PMC");
  std::vector<VertexSet> comps = connected_components(g, omega);
  std::vector<VertexSet> nbs;
  nbs.reserve(comps.size());
  for (const auto& d : comps) nbs.push_back(open_neighborhood(g, d));

  bool v_covered = false;
  for (const auto& nb : nbs)
    if (nb.test(v)) v_covered = true;
  if (!v_covered) raise(Fail::VNotCovered, "no component neighbors " + std::to_string(v));

  VertexSet need = omega - g.adj(v);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!nbs[i].test(v)) continue;
    for (std::size_t j = i; j < comps.size(); ++j) {
      if (!nbs[j].test(v)) continue;
      if ((nbs[i] | nbs[j]).contains_all(need)) return {comps[i], comps[j]};
    }
  }
  raise(Fail::NoSuchPair, "no component pair covers the PMC minus N(v)");
}

namespace {

// F-container for a separator: first valid f2 member, else a fresh witness,
// else (primitive) the separator itself.
VertexSet container_for_separator(const Graph& g, const VertexSet& s,
                                  const std::vector<VertexSet>& f2, const VertexSet& f_vertices,
                                  const std::vector<VertexSet>& coloring) {
  VertexSet s_in_f = s & f_vertices;
  for (const auto& a : f2)
    if (a.contains_all(s) && (a & f_vertices) == s_in_f) return a;
  Separation sep = full_components(g, s);
  if (sep.full_components.size() < 2)
    raise(Fail::NotAPmc, "adhesion is not a minimal separator");
  try {
    return witness_container_for_separator(g, s, sep.full_components[0], sep.full_components[1],
                                           coloring, f_vertices);
  } catch (const SolverError& e) {
    if (e.kind() == Fail::PrimitiveSeparator) return s;  // a set is its own F-container
    throw;
  }
}

}  // namespace

VertexSet impure_pmc_container(const Graph& g, const VertexSet& omega,
                               const std::vector<VertexSet>& f2, const VertexSet& f_vertices,
                               const std::vector<VertexSet>& coloring) {
  if (!is_pmc(g, omega)) raise(Fail::NotAPmc, "impure_pmc_container needs a PMC");
  std::unordered_set<VertexSet> f2set(f2.begin(), f2.end());

  VertexSet l(g.n()), s(g.n());
  bool found = false;
  for (const auto& d : connected_components(g, omega)) {
    VertexSet nb = open_neighborhood(g, d);
    if (!f2set.count(nb)) {
      l = d;
      s = nb;
      found = true;
      break;
    }
  }
  if (!found) raise(Fail::PurePmc, "every adhesion already lies in F2");

  Separation sep = full_components(g, s);
  VertexSet r(g.n());
  bool have_r = false;
  for (const auto& c : sep.full_components)
    if (!(c == l)) {
      r = c;
      have_r = true;
      break;
    }
  if (!have_r) raise(Fail::NotAPmc, "adhesion is not a minimal separator");

  int z_l = -1, z_r = -1;
  for (int z : s) {
    if (z_l == -1 && !g.adj(z).intersects(f_vertices - s - l)) z_l = z;
    if (z_r == -1 && !g.adj(z).intersects(f_vertices - s - r)) z_r = z;
  }
  if (z_l == -1 || z_r == -1)
    raise(Fail::NoZVertices, "no separator vertex is anticomplete to the solution side");

  auto [d1l, d2l] = two_covering_components(g, omega, z_l);
  auto [d1r, d2r] = two_covering_components(g, omega, z_r);

  VertexSet out(g.n());
  for (const auto& d : {d1l, d2l, d1r, d2r})
    out |= container_for_separator(g, open_neighborhood(g, d), f2, f_vertices, coloring);
  out |= g.adj(z_l) & g.adj(z_r);

  if (!out.contains_all(omega))
    throw std::logic_error("impure container failed to cover the PMC");
  return out;
}

VertexSet pmc_lift(const Graph& g, const std::vector<int>& order, const VertexSet& end_pmc) {
  VertexSet alive = g.vertices();
  for (int v : order) alive.reset(v);
  if (!is_pmc_within(g, alive, end_pmc))
    raise(Fail::LiftFailed, "end set is not a PMC of the prefix-deleted graph");

  VertexSet current = end_pmc;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    alive.set(*it);
    if (is_pmc_within(g, alive, current)) continue;  // smaller candidate first
    current.set(*it);
    if (!is_pmc_within(g, alive, current))
      raise(Fail::LiftFailed, "neither candidate is a PMC after reinserting " + std::to_string(*it));
  }
  return current;
}

bool is_survival_sequence(const Graph& g, const std::vector<int>& order, const VertexSet& omega) {
  VertexSet alive = g.vertices();
  VertexSet current = omega;
  if (!is_pmc_within(g, alive, current)) return false;
  for (int v : order) {
    alive.reset(v);
    current.reset(v);
    if (!is_pmc_within(g, alive, current)) return false;
  }
  return true;
}

std::vector<VertexSet> x_rec(const Graph& g, const std::vector<VertexSet>& y_family,
                             long long budget) {
  const int n = g.n();
  std::unordered_set<VertexSet> out;
  long long tested = 0;
  auto charge = [&](long long amount) {
    tested += amount;
    if (tested > budget) raise(Fail::BudgetExceeded, "x_rec candidate space exceeds budget");
  };

  std::vector<int> full_order(n);
  for (int i = 0; i < n; ++i) full_order[i] = i;
  out.insert(pmc_lift(g, full_order, VertexSet(n)));

  VertexSet alive = g.vertices();
  std::vector<int> prefix;
  for (int s = 0; s < n; ++s) {
    // alive = V \ {0..s-1}, prefix = (0..s-1); x_{s+1} is vertex s
    std::vector<VertexSet> y_s;
    {
      std::unordered_set<VertexSet> dedup;
      for (const auto& d : y_family)
        for (auto& c : components_within(g, d & alive))
          if (dedup.insert(c).second) y_s.push_back(std::move(c));
    }

    std::unordered_set<VertexSet> tried;
    auto consider = [&](const VertexSet& z) {
      if (z.empty() || !tried.insert(z).second) return;
      charge(1);
      if (!is_pmc_within(g, alive, z)) return;
      out.insert(pmc_lift(g, prefix, z));
    };

    std::vector<VertexSet> nbs;
    {
      std::unordered_set<VertexSet> dedup;
      for (const auto& d : y_s) {
        VertexSet nb = neighborhood_within(g, alive, d);
        VertexSet z = nb;
        z.set(s);
        consider(z);
        if (dedup.insert(nb).second) nbs.push_back(std::move(nb));
      }
    }

    // unions of up to four component neighborhoods
    std::unordered_set<VertexSet> union_set(nbs.begin(), nbs.end());
    std::vector<VertexSet> level = nbs;
    for (int depth = 1; depth < 4; ++depth) {
      std::vector<VertexSet> next;
      for (const auto& u : level)
        for (const auto& nb : nbs) {
          VertexSet merged = u | nb;
          if (union_set.insert(merged).second) next.push_back(std::move(merged));
        }
      charge((long long)level.size() * (long long)nbs.size());
      level = std::move(next);
    }
    std::vector<VertexSet> pair_ints;
    {
      std::unordered_set<VertexSet> dedup;
      for (int x = alive.first(); x != -1; x = alive.next(x)) {
        VertexSet ax = g.adj(x) & alive;
        for (int y = x; y != -1; y = alive.next(y)) {
          VertexSet common = ax & g.adj(y);
          if (dedup.insert(common).second) pair_ints.push_back(std::move(common));
        }
      }
    }
    for (const auto& u : union_set)
      for (const auto& p : pair_ints) {
        VertexSet z = u | p;
        z.reset(s);
        consider(z);
      }

    prefix.push_back(s);
    alive.reset(s);
  }

  std::vector<VertexSet> result(out.begin(), out.end());
  std::sort(result.begin(), result.end(), canonical_less);
  return result;
}

std::vector<VertexSet> container_family(const Graph& g, int k, long long budget) {
  ClassReport report = classify(g);
  if (!report.in_class_c) raise(Fail::NotInClassC, "container family needs a class-C graph");

  std::vector<VertexSet> f1 = enumerate_family_f1(g, k, budget);
  std::vector<VertexSet> f2 = extend_family_f2(g, f1);

  std::vector<VertexSet> y;
  {
    std::unordered_set<VertexSet> dedup;
    for (const auto& s : f2)
      for (auto& c : connected_components(g, s))
        if (dedup.insert(c).second) y.push_back(std::move(c));
  }
  std::vector<VertexSet> x2 = x_rec(g, y, budget);

  // unions of at most four F2 members, each with a common neighborhood glued on
  std::unordered_set<VertexSet> unions;
  unions.insert(VertexSet(g.n()));
  std::vector<VertexSet> level = {VertexSet(g.n())};
  for (int depth = 0; depth < 4; ++depth) {
    std::vector<VertexSet> next;
    for (const auto& u : level)
      for (const auto& s : f2) {
        VertexSet merged = u | s;
        if (unions.insert(merged).second) next.push_back(std::move(merged));
      }
    if ((long long)unions.size() > budget)
      raise(Fail::BudgetExceeded, "PMC container family exceeds budget");
    level = std::move(next);
  }
  std::vector<VertexSet> pair_ints;
  {
    std::unordered_set<VertexSet> dedup;
    for (int u = 0; u < g.n(); ++u)
      for (int v = u; v < g.n(); ++v) {
        VertexSet common = g.adj(u) & g.adj(v);
        if (dedup.insert(common).second) pair_ints.push_back(std::move(common));
      }
  }

  std::unordered_set<VertexSet> fam(x2.begin(), x2.end());
  for (const auto& u : unions)
    for (const auto& p : pair_ints) {
      fam.insert(u | p);
      if ((long long)fam.size() > budget)
        raise(Fail::BudgetExceeded, "PMC container family exceeds budget");
    }

  fam.erase(VertexSet(g.n()));  // the empty set can never contain a PMC
  std::vector<VertexSet> out(fam.begin(), fam.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<VertexSet> strip_containers(const std::vector<VertexSet>& family, int p, int n) {
  std::unordered_set<VertexSet> out;
  for (const auto& a : family) {
    std::vector<int> elems = a.to_vector();
    // all B ⊆ A with |B| <= p, by choosing drop positions
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t from, const VertexSet& current) -> void {
      out.insert(current);
      if ((int)chosen.size() == p) return;
      for (std::size_t i = from; i < elems.size(); ++i) {
        chosen.push_back(elems[i]);
        VertexSet smaller = current;
        smaller.reset(elems[i]);
        self(self, i + 1, std::move(smaller));
        chosen.pop_back();
      }
    };
    rec(rec, 0, a);
  }
  std::vector<VertexSet> result(out.begin(), out.end());
  (void)n;
  std::sort(result.begin(), result.end(), canonical_less);
  return result;
}

}  // namespace twc
