#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "twc/dp_solver.hpp"
#include "twc/generators.hpp"
#include "twc/minsep_pmc.hpp"
#include "twc/oracles.hpp"
#include "twc/recognition.hpp"

using namespace twc;

namespace {

std::vector<VertexSet> pmcs_of(const Graph& g) {
  std::vector<VertexSet> out;
  for (auto& rec : enumerate_pmcs(g, 1000000)) out.push_back(std::move(rec.omega));
  return out;
}

}  // namespace

TEST_CASE("exact treewidth") {
  CHECK(!exact_treewidth_le(complete_graph(5), 3));
  CHECK(exact_treewidth_le(complete_graph(5), 4));
  CHECK(exact_treewidth_le(path_graph(7), 1));
  CHECK(exact_treewidth_le(star_graph(5), 1));
  CHECK(!exact_treewidth_le(cycle_graph(5), 1));
  CHECK(exact_treewidth_le(cycle_graph(5), 2));
  CHECK(exact_treewidth(edgeless_graph(0)) == -1);
  CHECK(exact_treewidth(edgeless_graph(4)) == 0);
  CHECK(exact_treewidth(prism_graph(4)) == 4);
}

TEST_CASE("treewidth agrees with the elimination-order oracle") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + int(rng() % 7);  // up to 7: oracle enumerates permutations
    Graph g = random_graph(n, 1 + int(rng() % 3), 4, rng());
    int tw = test::treewidth_by_peo_oracle(g);
    CHECK(exact_treewidth(g) == tw);
    for (int bound = -1; bound <= n; ++bound) CHECK(exact_treewidth_le(g, bound) == (tw <= bound));
  }
}

TEST_CASE("is_feasible") {
  Graph c4 = cycle_graph(4);
  CHECK(is_feasible(c4, 1, VertexSet(4, {0}), VertexSet(4)));
  CHECK(is_feasible(c4, 2, VertexSet(4, {0, 2}), VertexSet(4)));
  CHECK(!is_feasible(c4, 1, VertexSet(4, {0}), VertexSet(4, {1})));
  // completing {0,2} next to {1} builds a triangle: width 2, not < 2
  CHECK(!is_feasible(c4, 2, VertexSet(4, {0, 2}), VertexSet(4, {1})));
  CHECK(is_feasible(c4, 3, VertexSet(4, {0, 2}), VertexSet(4, {1})));
}

TEST_CASE("glue") {
  CHECK(glue(VertexSet(6, {0}), {}) == VertexSet(6, {0}));
  CHECK(glue(VertexSet(6), {VertexSet(6, {1}), VertexSet(6, {3})}) == VertexSet(6, {1, 3}));
  CHECK(glue(VertexSet(6, {0}), {VertexSet(6, {2}), VertexSet(6, {4, 5})}) ==
        VertexSet(6, {0, 2, 4, 5}));
}

TEST_CASE("canonical order determines the reported optimum") {
  // C4, unit weights, k=1: optima {0,2} and {1,3}; the characteristic-vector
  // order prefers the set avoiding vertex 0
  Graph c4 = cycle_graph(4);
  WeightMap unit = unit_weights(4);
  VertexSet got = solve_with_containers(c4, unit, pmcs_of(c4), 1);
  CHECK(got == VertexSet(4, {1, 3}));
  CHECK(got == brute_tw_subgraph(c4, unit, 1));

  VertexSet all3 = solve_with_containers(edgeless_graph(3), unit_weights(3),
                                         pmcs_of(edgeless_graph(3)), 1);
  CHECK(all3 == VertexSet::all(3));

  Graph k4 = complete_graph(4);
  VertexSet pair = solve_with_containers(k4, unit_weights(4), pmcs_of(k4), 2);
  CHECK(pair.count() == 2);
  CHECK(pair == brute_tw_subgraph(k4, unit_weights(4), 2));
  CHECK(pair == VertexSet(4, {2, 3}));
}

TEST_CASE("canonical-order splitting property") {
  // replacing the inside-X part with a ≺-smaller part shrinks the whole set
  std::mt19937_64 rng(83);
  const int n = 12;
  for (int trial = 0; trial < 500; ++trial) {
    WeightMap w = random_weights(n, 30, rng());
    VertexSet x = test::set_of(n, rng());
    VertexSet outside = test::set_of(n, rng()) - x;
    VertexSet b1 = (test::set_of(n, rng()) & x) | outside;
    VertexSet b2 = (test::set_of(n, rng()) & x) | outside;
    if (prec_less(b1 & x, b2 & x, w)) CHECK(prec_less(b1, b2, w));
  }
}

TEST_CASE("empty family yields the empty set") {
  CHECK(solve_with_containers(cycle_graph(4), unit_weights(4), {}, 1) == VertexSet(4));
}

TEST_CASE("zero-vertex graphs flow through every solver") {
  Graph none = edgeless_graph(0);
  CHECK(solve_mwis(none, {}) == VertexSet(0));
  CHECK(solve_fvs(none) == VertexSet(0));
  CHECK(solve_tw_subgraph(none, {}, 1, FamilyStrategy::AllPmcs) == VertexSet(0));
  CHECK(enumerate_pmcs(none, 10).empty());
  CHECK(exact_treewidth_le(none, 0));
}

TEST_CASE("DP equals the subset-scan oracle on random graphs") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + int(rng() % 7);  // up to 8
    Graph g = random_graph(n, 1 + int(rng() % 3), 4, rng());
    WeightMap w = random_weights(n, 100, rng());
    int k = 1 + int(rng() % 3);
    CHECK(solve_with_containers(g, w, pmcs_of(g), k) == brute_tw_subgraph(g, w, k));
  }
}

TEST_CASE("inflated containers do not disturb the optimum") {
  // the promise only requires each family member to meet the optimum inside
  // its PMC; padding every PMC with vertices outside the optimum must leave
  // the answer untouched
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + int(rng() % 7);  // up to 9
    Graph g = random_graph(n, 1 + int(rng() % 3), 4, rng());
    WeightMap w = random_weights(n, 80, rng());
    int k = 1 + int(rng() % 3);
    VertexSet optimum = brute_tw_subgraph(g, w, k);
    std::vector<VertexSet> family;
    for (const auto& omega : pmcs_of(g)) {
      VertexSet padded = omega;
      VertexSet outside = g.vertices() - optimum - omega;
      for (int v : outside)
        if (rng() & 1) padded.set(v);
      family.push_back(std::move(padded));
    }
    CHECK(solve_with_containers(g, w, family, k) == optimum);
  }
}

TEST_CASE("DP scales past the ten-vertex sweeps") {
  std::mt19937_64 rng(131);
  for (int trial = 0; trial < 4; ++trial) {
    int n = 12 + int(rng() % 3);  // 12..14
    Graph g = random_graph(n, 1, 3, rng());
    WeightMap w = random_weights(n, 50, rng());
    int k = 1 + int(rng() % 2);
    CHECK(solve_with_containers(g, w, pmcs_of(g), k) == brute_tw_subgraph(g, w, k));
  }
}

TEST_CASE("result is invariant under state visit order") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 4 + int(rng() % 5);
    Graph g = random_graph(n, 1, 2, rng());
    WeightMap w = random_weights(n, 50, rng());
    int k = 1 + int(rng() % 2);
    auto family = pmcs_of(g);
    VertexSet reference = solve_with_containers(g, w, family, k);
    for (unsigned seed : {1u, 7u, 42u}) {
      DpOptions opts;
      opts.shuffle_seed = seed;
      opts.validate = true;
      CHECK(solve_with_containers(g, w, family, k, opts) == reference);
    }
  }
}

TEST_CASE("solve_tw_subgraph") {
  CHECK(weight_of(unit_weights(6),
                  solve_tw_subgraph(prism_graph(3), unit_weights(6), 1,
                                    FamilyStrategy::AllPmcs)) == 2);
  CHECK(weight_of(unit_weights(5),
                  solve_tw_subgraph(cycle_graph(5), unit_weights(5), 2,
                                    FamilyStrategy::AllPmcs)) == 4);
  // k >= n: everything fits one bag; zero-weight vertices stay out of the
  // canonical answer
  CHECK(solve_tw_subgraph(cycle_graph(4), unit_weights(4), 4, FamilyStrategy::AllPmcs) ==
        VertexSet::all(4));
  WeightMap wz = {0, 1, 2, 0};
  CHECK(solve_tw_subgraph(cycle_graph(4), wz, 7, FamilyStrategy::AllPmcs) == VertexSet(4, {1, 2}));

  // explicit family strategy accepts a provided container list
  auto fam = pmcs_of(cycle_graph(4));
  CHECK(solve_tw_subgraph(cycle_graph(4), unit_weights(4), 1, FamilyStrategy::ExplicitFamily,
                          &fam) == VertexSet(4, {1, 3}));

  // class-C family strategy matches on a prism
  CHECK(solve_tw_subgraph(prism_graph(3), unit_weights(6), 1, FamilyStrategy::ClassCFamily) ==
        solve_tw_subgraph(prism_graph(3), unit_weights(6), 1, FamilyStrategy::AllPmcs));
}

TEST_CASE("class-C family pipeline matches the oracle") {
  std::mt19937_64 rng(113);
  int done = 0;
  for (int trial = 0; done < 25 && trial < 400; ++trial) {
    int n = 3 + int(rng() % 6);  // up to 8
    Graph g = random_graph(n, 1 + int(rng() % 3), 4, rng());
    if (!classify(g).in_class_c) continue;
    ++done;
    for (int k : {1, 2}) {
      WeightMap w = random_weights(n, 60, rng());
      CHECK(solve_tw_subgraph(g, w, k, FamilyStrategy::ClassCFamily) ==
            brute_tw_subgraph(g, w, k));
    }
  }
  CHECK(done == 25);
  for (int p : {3, 4}) {
    Graph g = prism_graph(p);
    WeightMap w = random_weights(g.n(), 60, 1000 + p);
    for (int k : {1, 2})
      CHECK(solve_tw_subgraph(g, w, k, FamilyStrategy::ClassCFamily) ==
            brute_tw_subgraph(g, w, k));
  }
}

TEST_CASE("weights near the 64-bit range survive") {
  WeightMap w = {1ull << 40, 1ull << 41, 1ull << 40, 3};
  Graph c4 = cycle_graph(4);
  VertexSet got = solve_mwis(c4, w);
  CHECK(weight_of(w, got) == (1ull << 41) + 3);
  CHECK(got == VertexSet(4, {1, 3}));
}

TEST_CASE("solve_mwis") {
  Graph c4 = cycle_graph(4);
  WeightMap w = {5, 1, 1, 1};
  VertexSet got = solve_mwis(c4, w);
  CHECK(got == VertexSet(4, {0, 2}));
  CHECK(weight_of(w, got) == 6);

  VertexSet single = solve_mwis(complete_graph(4), unit_weights(4));
  CHECK(single.count() == 1);
  CHECK(single == VertexSet(4, {3}));  // canonical order prefers late vertices

  CHECK(weight_of(unit_weights(8), solve_mwis(prism_graph(4), unit_weights(8))) == 2);

  try {
    solve_mwis(cycle_graph(5), unit_weights(5));
    FAIL("expected NotLongHoleFree");
  } catch (const SolverError& e) {
    CHECK(e.kind() == Fail::NotLongHoleFree);
    CHECK(e.is_class_violation());
  }
}

TEST_CASE("solve_fvs") {
  CHECK(solve_fvs(complete_graph(4)).count() == 2);
  CHECK(solve_fvs(cycle_graph(4)).count() == 1);
  CHECK((int)solve_fvs(prism_graph(3)).count() ==
        6 - brute_max_induced_forest_size(prism_graph(3)));

  try {
    solve_fvs(path_graph(5));
    FAIL("expected NotP5Free");
  } catch (const SolverError& e) {
    CHECK(e.kind() == Fail::NotP5Free);
  }
}

TEST_CASE("solvers cross-check against independent scans") {
  std::mt19937_64 rng(101);
  int done = 0;
  for (int trial = 0; done < 20 && trial < 400; ++trial) {
    int n = 3 + int(rng() % 7);
    Graph g = random_graph(n, 1 + int(rng() % 3), 4, rng());
    WeightMap w = random_weights(n, 40, rng());
    if (!find_long_hole(g, 5)) {
      CHECK(weight_of(w, solve_mwis(g, w)) == brute_mwis_weight(g, w));
      ++done;
    }
    if (!find_induced_path(g, 5))
      CHECK((int)solve_fvs(g).count() == n - brute_max_induced_forest_size(g));
  }
  CHECK(done == 20);
}
