#include <doctest.h>

#include <algorithm>
#include <random>

#include "twc/vertex_set.hpp"

using namespace twc;

TEST_CASE("basic set operations") {
  VertexSet a(70, {0, 2, 64, 69});
  CHECK(a.count() == 4);
  CHECK(a.test(64));
  CHECK(!a.test(1));
  CHECK(a.first() == 0);
  CHECK(a.next(2) == 64);
  CHECK(a.next(69) == -1);

  VertexSet b(70, {2, 3, 64});
  CHECK((a & b).to_vector() == std::vector<int>{2, 64});
  CHECK((a | b).count() == 5);
  CHECK((a - b).to_vector() == std::vector<int>{0, 69});
  CHECK(a.contains_all(VertexSet(70, {0, 69})));
  CHECK(!a.contains_all(b));
  CHECK(a.intersects(b));
  CHECK(!a.intersects(VertexSet(70, {1, 5})));

  CHECK(VertexSet::all(3).to_vector() == std::vector<int>{0, 1, 2});
  CHECK(VertexSet(5).empty());
}

TEST_CASE("iteration ascends") {
  VertexSet s(130, {129, 0, 63, 64, 65});
  std::vector<int> got;
  for (int v : s) got.push_back(v);
  CHECK(got == std::vector<int>{0, 63, 64, 65, 129});
}

TEST_CASE("lex order prefers absence at the first differing vertex") {
  // characteristic vectors: 0101 vs 1010 — position 0 decides
  CHECK(lex_less(VertexSet(4, {1, 3}), VertexSet(4, {0, 2})));
  CHECK(!lex_less(VertexSet(4, {0, 2}), VertexSet(4, {1, 3})));
  CHECK(!lex_less(VertexSet(4, {1}), VertexSet(4, {1})));
  CHECK(lex_less(VertexSet(4, {3}), VertexSet(4, {0})));
  CHECK(lex_less(VertexSet(4), VertexSet(4, {3})));
}

TEST_CASE("canonical order compares element sequences") {
  CHECK(canonical_less(VertexSet(5, {0, 2}), VertexSet(5, {1})));
  CHECK(canonical_less(VertexSet(5, {0, 1}), VertexSet(5, {0, 2})));
  CHECK(canonical_less(VertexSet(5, {1}), VertexSet(5, {1, 2})));
  CHECK(!canonical_less(VertexSet(5, {1, 2}), VertexSet(5, {1})));
  CHECK(!canonical_less(VertexSet(5, {3}), VertexSet(5, {3})));
}

TEST_CASE("orders are strict weak orders on random sets") {
  std::mt19937_64 rng(7);
  std::vector<VertexSet> sets;
  for (int i = 0; i < 60; ++i) {
    VertexSet s(40);
    for (int v = 0; v < 40; ++v)
      if (rng() & 1) s.set(v);
    sets.push_back(s);
  }
  auto check_order = [&](auto less) {
    for (const auto& a : sets)
      for (const auto& b : sets) {
        if (a == b) {
          CHECK(!less(a, b));
          continue;
        }
        CHECK(less(a, b) != less(b, a));
        for (const auto& c : sets)
          if (less(a, b) && less(b, c)) CHECK(less(a, c));
      }
  };
  check_order([](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
  check_order([](const VertexSet& a, const VertexSet& b) { return canonical_less(a, b); });
}

TEST_CASE("hashing distinguishes universes and members") {
  CHECK(VertexSet(5, {1}).hash() != VertexSet(5, {2}).hash());
  CHECK(VertexSet(5).hash() != VertexSet(6).hash());
  CHECK(VertexSet(9, {3, 4}).hash() == VertexSet(9, {4, 3}).hash());
}
