#include "twc/generators.hpp"

#include <algorithm>
#include <random>

#include "twc/errors.hpp"
#include "twc/recognition.hpp"

namespace twc {

Graph edgeless_graph(int n) { return Graph(n, {}); }

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, es);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  if (n >= 3) es.push_back({0, n - 1});
  return Graph(n, es);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(n, es);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
  return Graph(leaves + 1, es);
}

Graph prism_graph(int p) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      es.push_back({i, j});
      es.push_back({p + i, p + j});
    }
  for (int i = 0; i < p; ++i) es.push_back({i, p + i});
  return Graph(2 * p, es);
}

Graph random_graph(int n, int num, int den, std::uint64_t seed) {
  if (den <= 0 || num < 0 || num > den) throw std::invalid_argument("bad edge probability");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((long long)(rng() % (std::uint64_t)den) < num) es.push_back({i, j});
  return Graph(n, es);
}

namespace {

template <typename Pred>
Graph rejection_sample(int n, int num, int den, std::uint64_t seed, int max_tries, Pred&& pred,
                       const char* what) {
  if (n > 64) raise(Fail::TooLarge, "random instances capped at 64 vertices");
  for (int t = 0; t < max_tries; ++t) {
    Graph g = random_graph(n, num, den, seed + std::uint64_t(t) * 0x9e3779b97f4a7c15ull);
    if (pred(g)) return g;
  }
  raise(Fail::GiveUp, std::string("no ") + what + " sample within the retry bound");
}

}  // namespace

Graph random_class_c_graph(int n, int num, int den, std::uint64_t seed, int max_tries) {
  return rejection_sample(n, num, den, seed, max_tries,
                          [](const Graph& g) { return classify(g).in_class_c; }, "class-C");
}

Graph random_long_hole_free_graph(int n, int num, int den, std::uint64_t seed, int max_tries) {
  return rejection_sample(n, num, den, seed, max_tries,
                          [](const Graph& g) { return !find_long_hole(g, 5); }, "long-hole-free");
}

Graph random_p5_free_graph(int n, int num, int den, std::uint64_t seed, int max_tries) {
  return rejection_sample(n, num, den, seed, max_tries,
                          [](const Graph& g) { return !find_induced_path(g, 5); }, "P5-free");
}

namespace {

// union or join of two recursively built cographs on vertex ranges
void cotree(std::mt19937_64& rng, int lo, int hi, std::vector<std::pair<int, int>>& es) {
  if (hi - lo <= 1) return;
  int split = lo + 1 + int(rng() % std::uint64_t(hi - lo - 1));
  bool join = rng() & 1;
  cotree(rng, lo, split, es);
  cotree(rng, split, hi, es);
  if (join)
    for (int i = lo; i < split; ++i)
      for (int j = split; j < hi; ++j) es.push_back({i, j});
}

}  // namespace

Graph random_cograph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> es;
  if (n > 1) cotree(rng, 0, n, es);
  return Graph(n, es);
}

Graph random_relabel(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dull);
  std::vector<int> perm(g.n());
  for (int i = 0; i < g.n(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges()) {
    int a = perm[u], b = perm[v];
    es.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.n(), es);
}

WeightMap unit_weights(int n) { return WeightMap(n, 1); }

WeightMap random_weights(int n, std::uint64_t max_value, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbull);
  WeightMap w(n);
  for (int i = 0; i < n; ++i) w[i] = rng() % (max_value + 1);
  return w;
}

}  // namespace twc
