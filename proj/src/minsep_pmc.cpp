#include "twc/minsep_pmc.hpp"

#include <algorithm>
#include <unordered_set>

namespace twc {

Separation full_components(const Graph& g, const VertexSet& s) {
  Separation sep;
  sep.s = s;
  for (auto& c : connected_components(g, s)) {
    if (open_neighborhood(g, c) == s)
      sep.full_components.push_back(std::move(c));
    else
      sep.other_components.push_back(std::move(c));
  }
  return sep;
}

bool is_minimal_separator(const Graph& g, const VertexSet& s) {
  int full = 0;
  for (const auto& c : connected_components(g, s))
    if (open_neighborhood(g, c) == s && ++full >= 2) return true;
  return false;
}

std::vector<VertexSet> enumerate_minimal_separators(const Graph& g, long long budget) {
  std::unordered_set<VertexSet> found;
  std::vector<VertexSet> queue;

  auto offer = [&](VertexSet cand) {
    if (found.count(cand)) return;
    if (!is_minimal_separator(g, cand)) return;
    if ((long long)found.size() >= budget)
      raise(Fail::BudgetExceeded, "minimal separator family exceeds budget");
    found.insert(cand);
    queue.push_back(std::move(cand));
  };

  for (int v = 0; v < g.n(); ++v) {
    VertexSet alive = g.vertices() - closed_neighborhood(g, VertexSet(g.n(), {v}));
    for (const auto& c : components_within(g, alive)) offer(open_neighborhood(g, c));
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    VertexSet s = queue[qi];  // copy: queue may reallocate
    for (int x : s) {
      VertexSet alive = g.vertices() - s - closed_neighborhood(g, VertexSet(g.n(), {x}));
      for (const auto& c : components_within(g, alive)) offer(open_neighborhood(g, c));
    }
  }

  std::vector<VertexSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_pmc_within(const Graph& g, const VertexSet& alive, const VertexSet& omega) {
  if (!alive.contains_all(omega)) return false;
  if (omega.empty()) return alive.empty();
  std::vector<VertexSet> neighborhoods;
  for (const auto& d : components_within(g, alive - omega)) {
    VertexSet nb = neighborhood_within(g, alive, d);
    if (nb == omega) return false;  // N(D) must be a proper subset
    neighborhoods.push_back(std::move(nb));
  }
  for (int x : omega) {
    VertexSet rest = omega - g.adj(x);
    for (int y = rest.next(x); y != -1; y = rest.next(y)) {
      bool covered = false;
      for (const auto& nb : neighborhoods)
        if (nb.test(x) && nb.test(y)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  }
  return true;
}

bool is_pmc(const Graph& g, const VertexSet& omega) {
  return is_pmc_within(g, g.vertices(), omega);
}

std::vector<PmcRecord> enumerate_pmcs(const Graph& g, long long budget) {
  const int n = g.n();
  if (n > 22) raise(Fail::BudgetExceeded, "subset scan beyond 22 vertices");
  std::vector<PmcRecord> out;
  VertexSet omega(n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    omega.clear();
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) omega.set(v);
    if (!is_pmc(g, omega)) continue;
    if ((long long)out.size() >= budget) raise(Fail::BudgetExceeded, "PMC family exceeds budget");
    PmcRecord rec;
    rec.omega = omega;
    for (const auto& d : connected_components(g, omega))
      rec.adhesions.push_back(open_neighborhood(g, d));
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end(),
            [](const PmcRecord& a, const PmcRecord& b) { return canonical_less(a.omega, b.omega); });
  return out;
}

std::vector<VertexSet> adhesions(const Graph& g, const VertexSet& omega) {
  if (!is_pmc(g, omega)) raise(Fail::NotAPmc, "adhesions of a non-PMC requested");
  std::vector<VertexSet> out;
  for (const auto& d : connected_components(g, omega)) {
    VertexSet nb = open_neighborhood(g, d);
    if (!is_minimal_separator(g, nb))
      raise(Fail::NotAPmc, "adhesion fails the minimal-separator check");
    out.push_back(std::move(nb));
  }
  return out;
}

}  // namespace twc
