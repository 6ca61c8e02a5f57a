#include <doctest.h>

#include <random>
#include <sstream>

#include "test_helpers.hpp"
#include "twc/generators.hpp"
#include "twc/instance_io.hpp"
#include "twc/oracles.hpp"
#include "twc/recognition.hpp"
#include "twc/verify.hpp"

using namespace twc;

TEST_CASE("instance parsing") {
  std::istringstream in("4 4\n0 1\n1 2\n2 3\n0 3\nw 0 5\n");
  Instance inst = parse_instance(in, "c4");
  CHECK(inst.graph.n() == 4);
  CHECK(inst.graph.m() == 4);
  CHECK(inst.weights == WeightMap{5, 1, 1, 1});

  std::ostringstream out;
  write_instance(out, inst);
  std::istringstream back(out.str());
  Instance again = parse_instance(back, "c4");
  CHECK(again.graph.edges() == inst.graph.edges());
  CHECK(again.weights == inst.weights);
}

TEST_CASE("instance parse errors") {
  auto expect_parse_error = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_instance(in, "bad");
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const SolverError& e) {
      CHECK(e.kind() == Fail::ParseError);
    }
  };
  expect_parse_error("");
  expect_parse_error("2\n");
  expect_parse_error("2 1\n1 0\n");     // u < v required
  expect_parse_error("2 1\n0 2\n");     // out of range
  expect_parse_error("2 1\n0 1\n0 1\n");  // extra edge
  expect_parse_error("2 2\n0 1\n");     // missing edge
  expect_parse_error("2 0\nhello\n");
  expect_parse_error("3 1\n0 1\nw 5 1\n");
  expect_parse_error("2 1\n0 1 9\n");
}

TEST_CASE("family parsing") {
  std::istringstream in("0 2\n\n1\n");
  auto fam = parse_family(in, 3);
  REQUIRE(fam.size() == 2);
  CHECK(fam[0] == VertexSet(3, {0, 2}));
  CHECK(fam[1] == VertexSet(3, {1}));

  std::istringstream bad("0 7\n");
  CHECK_THROWS_AS(parse_family(bad, 3), SolverError);
}

TEST_CASE("generators are deterministic per seed") {
  Graph a = random_graph(10, 1, 2, 12345);
  Graph b = random_graph(10, 1, 2, 12345);
  CHECK(a.edges() == b.edges());
  CHECK(!(random_graph(10, 1, 2, 54321).edges() == a.edges()));

  Graph c1 = random_class_c_graph(8, 1, 2, 99);
  Graph c2 = random_class_c_graph(8, 1, 2, 99);
  CHECK(c1.edges() == c2.edges());
  CHECK(classify(c1).in_class_c);
}

TEST_CASE("generator class guarantees") {
  CHECK(random_class_c_graph(0, 1, 2, 1).n() == 0);
  CHECK(classify(random_class_c_graph(5, 1, 1, 1)).in_class_c);  // K5

  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 4 + int(rng() % 9);
    CHECK(!find_long_hole(random_long_hole_free_graph(n, 2, 4, rng()), 5));
    CHECK(!find_induced_path(random_p5_free_graph(n, 2, 4, rng()), 5));
    Graph cg = random_cograph(n, rng());
    CHECK(!find_induced_path(cg, 4));  // cographs have no induced P4 at all
  }
}

TEST_CASE("rejection samplers give up deterministically") {
  try {
    random_class_c_graph(8, 1, 2, 7, 0);
    FAIL("expected GiveUp");
  } catch (const SolverError& e) {
    CHECK(e.kind() == Fail::GiveUp);
  }
}

TEST_CASE("prism structure") {
  Graph pr = prism_graph(4);
  CHECK(pr.n() == 8);
  CHECK(pr.m() == 2 * 6 + 4);
  CHECK(is_clique(pr, VertexSet(8, {0, 1, 2, 3})));
  CHECK(is_clique(pr, VertexSet(8, {4, 5, 6, 7})));
  for (int i = 0; i < 4; ++i) CHECK(pr.has_edge(i, 4 + i));
}

TEST_CASE("definition oracle on named graphs") {
  auto c4 = brute_pmcs_by_definition(cycle_graph(4));
  REQUIRE(c4.size() == 4);
  CHECK(c4[0] == VertexSet(4, {0, 1, 2}));
  CHECK(c4[1] == VertexSet(4, {0, 1, 3}));
  CHECK(c4[2] == VertexSet(4, {0, 2, 3}));
  CHECK(c4[3] == VertexSet(4, {1, 2, 3}));

  auto p3 = brute_pmcs_by_definition(path_graph(3));
  REQUIRE(p3.size() == 2);
  CHECK(p3[0] == VertexSet(3, {0, 1}));
  CHECK(p3[1] == VertexSet(3, {1, 2}));

  auto k3 = brute_pmcs_by_definition(complete_graph(3));
  REQUIRE(k3.size() == 1);
  CHECK(k3[0] == VertexSet::all(3));
}

TEST_CASE("chordality test") {
  CHECK(is_chordal(complete_graph(5)));
  CHECK(is_chordal(path_graph(6)));
  CHECK(is_chordal(star_graph(4)));
  CHECK(!is_chordal(cycle_graph(4)));
  CHECK(!is_chordal(cycle_graph(6)));
  CHECK(is_chordal(edgeless_graph(0)));
}

TEST_CASE("brute subset scan corner cases") {
  CHECK(brute_tw_subgraph(complete_graph(4), unit_weights(4), 4) == VertexSet::all(4));
  CHECK(brute_tw_subgraph(edgeless_graph(0), {}, 1) == VertexSet(0));
  CHECK(brute_tw_subgraph(edgeless_graph(3), unit_weights(3), 1) == VertexSet::all(3));
  try {
    brute_tw_subgraph(edgeless_graph(17), unit_weights(17), 1);
    FAIL("expected TooLarge");
  } catch (const SolverError& e) {
    CHECK(e.kind() == Fail::TooLarge);
  }
}

TEST_CASE("brute oracles cross-check each other") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + int(rng() % 8);
    Graph g = random_graph(n, 1 + int(rng() % 3), 4, rng());
    WeightMap w = random_weights(n, 30, rng());
    CHECK(weight_of(w, brute_tw_subgraph(g, w, 1)) == brute_mwis_weight(g, w));
    CHECK((int)brute_tw_subgraph(g, unit_weights(n), 2).count() ==
          brute_max_induced_forest_size(g));
  }
}

TEST_CASE("verify suites pass on bundled-style instances") {
  Instance c4{cycle_graph(4), {5, 1, 1, 1}, "c4"};
  std::ostringstream sink;
  VerifyOptions opts;
  CHECK(verify_sep_containers(c4, opts, sink));
  CHECK(verify_pmc_containers(c4, opts, sink));
  CHECK(verify_dp(c4, opts, sink));

  Instance pr{prism_graph(3), unit_weights(6), "prism3"};
  CHECK(verify_sep_containers(pr, opts, sink));
  CHECK(verify_pmc_containers(pr, opts, sink));
  CHECK(verify_dp(pr, opts, sink));

  Instance hole{cycle_graph(6), unit_weights(6), "c6"};
  CHECK_THROWS_AS(verify_sep_containers(hole, opts, sink), SolverError);
}
