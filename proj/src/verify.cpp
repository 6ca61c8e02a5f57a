#include "twc/verify.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <unordered_set>

#include "twc/dp_solver.hpp"
#include "twc/generators.hpp"
#include "twc/minsep_pmc.hpp"
#include "twc/oracles.hpp"
#include "twc/pmc_containers.hpp"
#include "twc/recognition.hpp"
#include "twc/sep_containers.hpp"

namespace twc {

namespace {

struct Check {
  std::ostream& out;
  bool all_ok = true;
  void report(const std::string& name, long long checked, long long violations) {
    out << (violations == 0 ? "ok   " : "FAIL ") << name << " (" << checked << " checks, "
        << violations << " violations)\n";
    if (violations) all_ok = false;
  }
};

std::vector<VertexSet> all_pmcs(const Graph& g, long long budget) {
  std::vector<VertexSet> out;
  for (auto& rec : enumerate_pmcs(g, budget)) out.push_back(std::move(rec.omega));
  return out;
}

}  // namespace

bool verify_sep_containers(const Instance& inst, const VerifyOptions& opts, std::ostream& out) {
  const Graph& g = inst.graph;
  if (g.n() > opts.max_n) raise(Fail::TooLarge, "instance beyond --max-n");
  if (!classify(g).in_class_c) raise(Fail::NotInClassC, "sep-containers suite needs a class-C graph");
  Check check{out};

  std::vector<VertexSet> seps = enumerate_minimal_separators(g, opts.budget);
  for (int k : {1, 2}) {
    VertexSet f = brute_tw_subgraph(g, inst.weights, k);
    std::vector<VertexSet> coloring = degeneracy_coloring_within(g, f);

    long long checked = 0, violations = 0;
    for (const auto& s : seps) {
      Separation sep = full_components(g, s);
      const auto& fc = sep.full_components;
      for (std::size_t i = 0; i < fc.size(); ++i)
        for (std::size_t j = 0; j < fc.size(); ++j) {
          if (i == j) continue;
          VertexSet a(g.n());
          try {
            a = witness_container_for_separator(g, s, fc[i], fc[j], coloring, f);
          } catch (const SolverError& e) {
            if (e.kind() == Fail::PrimitiveSeparator) continue;
            throw;
          }
          ++checked;
          if (!a.contains_all(s) || !((a & f) == (s & f))) ++violations;
        }
    }
    check.report("separator containers (k=" + std::to_string(k) + ")", checked, violations);

    std::vector<VertexSet> f2 =
        extend_family_f2(g, family_f1_for_solution(g, coloring, f, opts.budget));
    std::unordered_set<VertexSet> f2set(f2.begin(), f2.end());
    checked = violations = 0;
    for (const auto& s : seps) {
      if (f2set.count(s)) continue;
      Separation sep = full_components(g, s);
      for (std::size_t i = 0; i < sep.full_components.size(); ++i)
        for (std::size_t j = 0; j < sep.full_components.size(); ++j) {
          if (i == j) continue;
          const VertexSet& l = sep.full_components[i];
          const VertexSet& r = sep.full_components[j];
          ++checked;
          bool has_zl = false, has_zr = false;
          for (int z : s) {
            if (!g.adj(z).intersects(f - s - l)) has_zl = true;
            if (!g.adj(z).intersects(f - s - r)) has_zr = true;
          }
          if (!has_zl || !has_zr) ++violations;
        }
    }
    check.report("anticomplete pair for separators outside F2 (k=" + std::to_string(k) + ")",
                 checked, violations);
  }
  return check.all_ok;
}

bool verify_pmc_containers(const Instance& inst, const VerifyOptions& opts, std::ostream& out) {
  const Graph& g = inst.graph;
  const int n = g.n();
  if (n > opts.max_n) raise(Fail::TooLarge, "instance beyond --max-n");
  if (!classify(g).in_class_c) raise(Fail::NotInClassC, "pmc-containers suite needs a class-C graph");
  Check check{out};
  std::mt19937_64 rng(opts.seed);

  // lifting round trips over random prefixes
  long long checked = 0, violations = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    int len = int(rng() % std::uint64_t(n + 1));
    std::vector<int> order(perm.begin(), perm.begin() + len);
    VertexSet alive = g.vertices();
    for (int v : order) alive.reset(v);
    std::vector<int> avail = alive.to_vector();
    std::uint64_t limit = std::uint64_t{1} << avail.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
      VertexSet omega(n);
      for (std::size_t b = 0; b < avail.size(); ++b)
        if ((mask >> b) & 1) omega.set(avail[b]);
      if (!is_pmc_within(g, alive, omega)) continue;
      ++checked;
      VertexSet lifted = pmc_lift(g, order, omega);
      bool ok = is_pmc(g, lifted) && is_survival_sequence(g, order, lifted);
      VertexSet removed = lifted;
      for (int v : order) removed.reset(v);
      ok = ok && removed == omega;
      if (!ok) ++violations;
    }
  }
  check.report("PMC lifting round trips", checked, violations);

  std::vector<VertexSet> pmcs = all_pmcs(g, opts.budget);

  checked = violations = 0;
  for (const auto& omega : pmcs) {
    std::vector<int> verts = omega.to_vector();
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        if (g.has_edge(verts[i], verts[j])) continue;
        ++checked;
        try {
          covering_component(g, omega, VertexSet(n, {verts[i], verts[j]}));
        } catch (const SolverError&) {
          ++violations;
        }
      }
    for (int v : omega) {
      bool covered = false;
      for (const auto& d : connected_components(g, omega))
        if (open_neighborhood(g, d).test(v)) covered = true;
      if (!covered) continue;
      ++checked;
      try {
        two_covering_components(g, omega, v);
      } catch (const SolverError&) {
        ++violations;
      }
    }
  }
  check.report("covering components exist", checked, violations);

  if (n > 7) {
    out << "skip x_rec completeness (needs n <= 7)\n";
  } else {
    std::vector<VertexSet> f2 = extend_family_f2(g, enumerate_family_f1(g, 1, opts.budget));
    std::vector<VertexSet> y;
    std::unordered_set<VertexSet> dedup;
    for (const auto& s : f2)
      for (auto& c : connected_components(g, s))
        if (dedup.insert(c).second) y.push_back(std::move(c));
    std::unordered_set<VertexSet> rec_set;
    for (auto& x : x_rec(g, y, opts.budget)) rec_set.insert(std::move(x));
    checked = violations = 0;
    for (const auto& omega : pmcs) {
      bool all_in_y = true;
      for (const auto& d : connected_components(g, omega))
        if (!dedup.count(d)) all_in_y = false;
      if (!all_in_y) continue;
      ++checked;
      if (!rec_set.count(omega)) ++violations;
    }
    check.report("x_rec completeness", checked, violations);
  }

  for (int k : {1, 2}) {
    VertexSet f = brute_tw_subgraph(g, inst.weights, k);
    std::vector<VertexSet> coloring = degeneracy_coloring_within(g, f);
    std::vector<VertexSet> f2 =
        extend_family_f2(g, family_f1_for_solution(g, coloring, f, opts.budget));
    std::unordered_set<VertexSet> f2set(f2.begin(), f2.end());
    checked = violations = 0;
    for (const auto& omega : pmcs) {
      bool impure = false;
      for (const auto& d : connected_components(g, omega))
        if (!f2set.count(open_neighborhood(g, d))) impure = true;
      if (!impure) continue;
      ++checked;
      try {
        VertexSet a = impure_pmc_container(g, omega, f2, f, coloring);
        if (!a.contains_all(omega) || !((a & f) == (omega & f))) ++violations;
      } catch (const SolverError&) {
        ++violations;
      }
    }
    check.report("impure PMC containers (k=" + std::to_string(k) + ")", checked, violations);
  }
  return check.all_ok;
}

bool verify_dp(const Instance& inst, const VerifyOptions& opts, std::ostream& out) {
  const Graph& g = inst.graph;
  if (g.n() > opts.max_n) raise(Fail::TooLarge, "instance beyond --max-n");
  Check check{out};
  std::vector<VertexSet> family = all_pmcs(g, opts.budget);
  for (int k : {1, 2, 3}) {
    long long checked = 0, violations = 0;
    for (int round = 0; round < 4; ++round) {
      WeightMap w = round == 0 ? inst.weights
                               : random_weights(g.n(), 100, opts.seed + std::uint64_t(round));
      ++checked;
      if (!(solve_with_containers(g, w, family, k) == brute_tw_subgraph(g, w, k))) ++violations;
    }
    check.report("DP matches subset-scan oracle (k=" + std::to_string(k) + ")", checked,
                 violations);
  }
  return check.all_ok;
}

}  // namespace twc
