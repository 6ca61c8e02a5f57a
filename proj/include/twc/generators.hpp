#pragma once

#include <cstdint>

#include "twc/graph.hpp"

namespace twc {

Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0

// Two p-cliques {0..p-1} and {p..2p-1} joined by the matching i -- p+i.
Graph prism_graph(int p);

// G(n, num/den) with a seeded generator; exact rational edge probability.
Graph random_graph(int n, int num, int den, std::uint64_t seed);

// Rejection-samples random_graph until classify reports membership in class
// C; deterministic per seed. Throws GiveUp after max_tries rejections.
Graph random_class_c_graph(int n, int num, int den, std::uint64_t seed, int max_tries = 400);

// Same pattern for the two solver input classes.
Graph random_long_hole_free_graph(int n, int num, int den, std::uint64_t seed, int max_tries = 400);
Graph random_p5_free_graph(int n, int num, int den, std::uint64_t seed, int max_tries = 400);

// Random cotree evaluation: P4-free, hence P5-free, long-hole-free and in
// class C. Cheap structured instances for the sweeps.
Graph random_cograph(int n, std::uint64_t seed);

// Copy of g with vertex ids permuted by a seeded random permutation.
Graph random_relabel(const Graph& g, std::uint64_t seed);

WeightMap unit_weights(int n);
WeightMap random_weights(int n, std::uint64_t max_value, std::uint64_t seed);

}  // namespace twc
