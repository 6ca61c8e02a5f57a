#include <doctest.h>

#include <random>

#include "test_helpers.hpp"
#include "twc/dp_solver.hpp"
#include "twc/generators.hpp"
#include "twc/recognition.hpp"

using namespace twc;

namespace {

// subset-enumeration oracle for "has an induced cycle of length >= min_len"
bool has_long_hole_oracle(const Graph& g, int min_len) {
  bool found = false;
  test::for_each_subset(g.n(), [&](const VertexSet& s) {
    if (s.count() >= min_len && test::induces_cycle(g, s)) found = true;
  });
  return found;
}

// 6-subset oracle for induced extended C5s: an induced C5 plus a vertex
// adjacent to one hole vertex or two consecutive ones
bool has_extended_c5_oracle(const Graph& g) {
  bool found = false;
  test::for_each_subset(g.n(), [&](const VertexSet& s) {
    if (found || s.count() != 6) return;
    for (int x : s) {
      VertexSet hole = s;
      hole.reset(x);
      if (!test::induces_cycle(g, hole)) continue;
      VertexSet t = g.adj(x) & hole;
      if (t.count() == 1) {
        found = true;
        return;
      }
      if (t.count() == 2) {
        int a = t.first(), b = t.next(a);
        if (g.has_edge(a, b)) {
          found = true;
          return;
        }
      }
    }
  });
  return found;
}

bool witness_is_induced_cycle(const Graph& g, const std::vector<int>& cycle) {
  VertexSet s(g.n());
  for (int v : cycle) {
    if (s.test(v)) return false;
    s.set(v);
  }
  if (!test::induces_cycle(g, s)) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

bool witness_is_induced_path(const Graph& g, const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      bool expect = (j == i + 1);
      if (g.has_edge(p[i], p[j]) != expect) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("long hole witnesses") {
  auto hole = find_long_hole(cycle_graph(6), 6);
  REQUIRE(hole.has_value());
  CHECK(hole->size() == 6);
  CHECK(witness_is_induced_cycle(cycle_graph(6), *hole));

  CHECK(!find_long_hole(cycle_graph(5), 6));
  auto five = find_long_hole(cycle_graph(5), 5);
  REQUIRE(five.has_value());
  CHECK(witness_is_induced_cycle(cycle_graph(5), *five));

  CHECK(!find_long_hole(complete_graph(6), 5));
  CHECK(!find_long_hole(prism_graph(4), 5));
}

TEST_CASE("long hole agrees with subset oracle on random graphs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 4 + int(rng() % 6);  // up to 9
    Graph g = random_graph(n, 1 + int(rng() % 3), 4, rng());
    for (int min_len : {5, 6}) {
      auto hole = find_long_hole(g, min_len);
      CHECK(hole.has_value() == has_long_hole_oracle(g, min_len));
      if (hole) {
        CHECK((int)hole->size() >= min_len);
        CHECK(witness_is_induced_cycle(g, *hole));
      }
    }
  }
}

TEST_CASE("extended C5 detection") {
  // C5 plus a pendant on one hole vertex
  Graph pendant(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}});
  auto w = find_extended_c5(pendant);
  REQUIRE(w.has_value());
  CHECK(w->size() == 6);
  {
    VertexSet hole(6, {(*w)[0], (*w)[1], (*w)[2], (*w)[3], (*w)[4]});
    CHECK(test::induces_cycle(pendant, hole));
    VertexSet t = pendant.adj((*w)[5]) & hole;
    CHECK((t.count() == 1 || (t.count() == 2 && pendant.has_edge(t.first(), t.next(t.first())))));
  }

  CHECK(!find_extended_c5(cycle_graph(5)));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 5 + int(rng() % 5);
    Graph g = random_graph(n, 1 + int(rng() % 3), 4, rng());
    CHECK(find_extended_c5(g).has_value() == has_extended_c5_oracle(g));
  }
}

TEST_CASE("classify") {
  ClassReport pr = classify(prism_graph(4));
  CHECK(pr.in_class_c);
  CHECK(pr.is_p5_free);
  CHECK(pr.is_long_hole_free);

  CHECK(!classify(cycle_graph(6)).in_class_c);

  ClassReport p5 = classify(path_graph(5));
  CHECK(!p5.is_p5_free);
  CHECK(p5.in_class_c);
  REQUIRE(p5.p5.has_value());
  CHECK(witness_is_induced_path(path_graph(5), *p5.p5));
}

TEST_CASE("classify is hereditary on random class-C graphs") {
  std::mt19937_64 rng(9);
  int done = 0;
  for (int trial = 0; done < 12 && trial < 60; ++trial) {
    int n = 6 + int(rng() % 3);
    Graph g = random_graph(n, 1 + int(rng() % 3), 4, rng());
    if (!classify(g).in_class_c) continue;
    ++done;
    int drop = int(rng() % std::uint64_t(n));
    auto [h, verts] = induced_subgraph(g, g.vertices() - VertexSet(n, {drop}));
    CHECK(classify(h).in_class_c);
  }
  CHECK(done > 0);
}

TEST_CASE("coloring size is bounded by treewidth") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + int(rng() % 9);
    Graph g = random_graph(n, 1 + int(rng() % 3), 4, rng());
    int tw = exact_treewidth(g);
    CHECK((int)degeneracy_coloring(g).size() <= tw + 1);
  }
}

TEST_CASE("degeneracy coloring") {
  auto classes = degeneracy_coloring(edgeless_graph(3));
  REQUIRE(classes.size() == 1);
  CHECK(classes[0] == VertexSet(3, {0, 1, 2}));

  CHECK(degeneracy_coloring(path_graph(6)).size() <= 2);
  CHECK(degeneracy_coloring(star_graph(4)).size() == 2);

  auto k4 = degeneracy_coloring(complete_graph(4));
  CHECK(k4.size() == 4);
  for (const auto& c : k4) CHECK(c.count() == 1);

  // proper coloring on random graphs
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + int(rng() % 10);
    Graph g = random_graph(n, 1, 2, rng());
    auto coloring = degeneracy_coloring(g);
    VertexSet covered(n);
    for (const auto& c : coloring) {
      CHECK(!covered.intersects(c));
      covered |= c;
      for (int v : c) CHECK(!(g.adj(v) & c).count());
    }
    CHECK(covered == g.vertices());
  }
}
