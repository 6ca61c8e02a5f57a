#pragma once

#include <array>
#include <optional>
#include <vector>

#include "twc/errors.hpp"
#include "twc/graph.hpp"

namespace twc {

// The twelve role slots of the witness: two marked vertices a1,a2 in the
// dominating clique Z ⊆ L with their private separator vertices b_i = f(a_i)
// and opposite-side anchors r_i = g(a_i); symmetrically d1,d2 in Z' ⊆ R with
// c_i = f(d_i) and l_i = g(d_i). Distinct slots may hold the same vertex.
enum Role : int { A1, A2, B1, B2, R1, R2, C1, C2, D1, D2, L1, L2, kRoleCount };

enum class ProfileClass { NotAProfile, Unambiguous, StrictlyL, StrictlyR, BothLR };

// Everything derived from a minimal separator s with chosen full components
// l_side and r_side that the container construction needs.
struct SeparatorWitness {
  VertexSet s;
  VertexSet l_side;
  VertexSet r_side;
  VertexSet z;        // dominating clique inside l_side
  VertexSet z_prime;  // dominating clique inside r_side
  std::vector<int> f;      // f[v] for v in z ∪ z_prime, else -1
  std::vector<int> g_map;  // g[v] for v in z ∪ z_prime, else -1
  std::array<int, kRoleCount> roles{};
  // One optional pivot per color class; empty vectors mean no pivots chosen.
  std::vector<std::optional<int>> pivots_l;
  std::vector<std::optional<int>> pivots_r;
};

// F0: the sets N(C) over C in cc(G - N[v]), all v.
// May contain sets that are not separators; contains every primitive one.
std::vector<VertexSet> primitive_family_f0(const Graph& g);

// Inclusion-peeled connected Z ⊆ d with N(Z) ⊇ s; peeling removes vertices in
// descending id order while connectivity and domination survive, to fixpoint.
// The result must be a clique in the supported class; NotAClique otherwise.
VertexSet minimal_dominating_clique_z(const Graph& g, const VertexSet& s, const VertexSet& d);

// Smallest s-vertex whose unique neighbor in z is v.
int private_vertex_f(const Graph& g, const VertexSet& s, const VertexSet& z, int v);

ProfileClass classify_profile(const Graph& g, const SeparatorWitness& w, int v);

// (z_l, z_r): z_r = vertices complete to {d1,d2} and anticomplete to
// {c1,c2,l1,l2}; z_l symmetric with the a/b/r roles.
std::pair<VertexSet, VertexSet> measuring_sets(const Graph& g, const SeparatorWitness& w);

// The container S-hat assembled from the witness roles and pivots.
VertexSet assemble_container(const Graph& g, const SeparatorWitness& w);

// Builds roles (not pivots) for a non-primitive separator with full
// components l and r. Throws PrimitiveSeparator when either dominating
// clique is a single vertex, NotAClique / NoPrivateVertex on class promise
// violations.
SeparatorWitness build_separator_witness(const Graph& g, const VertexSet& s, const VertexSet& l,
                                         const VertexSet& r);

// Full witness path: builds roles, derives pivots from the coloring of
// G[f_vertices] by the inclusion-maximality rule, and assembles the
// container. When the preconditions hold the result A satisfies s ⊆ A and
// A ∩ f_vertices = s ∩ f_vertices.
VertexSet witness_container_for_separator(const Graph& g, const VertexSet& s, const VertexSet& l,
                                          const VertexSet& r,
                                          const std::vector<VertexSet>& coloring,
                                          const VertexSet& f_vertices);

// Budget-limited container family for all minimal separators: F0 plus the
// witness containers of every (separator, ordered full-component pair),
// crossed with every union of at most k vertex neighborhoods as the pivot
// masks of each side.
std::vector<VertexSet> enumerate_family_f1(const Graph& g, int k, long long budget);

// F2 := F1 ∪ { N(D) : D in cc(G - S-hat), S-hat in F1 }.
std::vector<VertexSet> extend_family_f2(const Graph& g, const std::vector<VertexSet>& f1);

// The witness path for a known solution: F0 plus the witness container of
// every (non-primitive separator, ordered full-component pair) against the
// given coloring of G[f_vertices]. Contains an F-container for every minimal
// separator when f_vertices induces the colored solution.
std::vector<VertexSet> family_f1_for_solution(const Graph& g,
                                              const std::vector<VertexSet>& coloring,
                                              const VertexSet& f_vertices, long long budget);

}  // namespace twc
