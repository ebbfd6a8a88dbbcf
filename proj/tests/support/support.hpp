#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "causalorder/bipartite_core.hpp"
#include "causalorder/causal_ordering.hpp"
#include "causalorder/constraint_system.hpp"
#include "causalorder/mixed_graph.hpp"

namespace causalorder::testing {

using Rng = std::mt19937_64;

std::string fixture_path(const std::string& name);
SystemOfConstraints load_fixture(const std::string& name);
BipartiteGraph fixture_graph(const std::string& name);
DirectedMixedGraph load_graph_fixture(const std::string& name);

// ---- generators ----------------------------------------------------------

// Endogenous graph on v_0.. and f_0.. with independent edges, plus up to
// `max_w` exogenous variables w_0.. each joined to one or two constraints.
BipartiteGraph random_bipartite(Rng& rng, std::size_t n_v, std::size_t n_f, double density, std::size_t max_w = 0);

// Square graph with a planted perfect matching and extra edges.
BipartiteGraph random_self_contained(Rng& rng, std::size_t n, double density, std::size_t max_w = 0);

// Every bipartite graph on n + n vertices (no exogenous) that has a perfect matching.
std::vector<BipartiteGraph> all_self_contained(std::size_t n);

DirectedMixedGraph random_dmg(Rng& rng, std::size_t n, double p_directed, double p_bidirected);

// Uniquely solvable linear-Gaussian system with a self-contained endogenous
// part of `n` equations, one noise term per equation and an occasional
// shared noise term. Coefficients lie in [-2,-0.5] u [0.5,2].
SystemOfConstraints random_linear_system(Rng& rng, std::size_t n);

double random_coefficient(Rng& rng);

// ---- oracles -------------------------------------------------------------

// Every matching of maximum cardinality, by exhaustive search.
std::vector<Matching> all_maximum_matchings(const BipartiteGraph& g);
// Every perfect matching of the endogenous subgraph.
std::vector<Matching> all_perfect_matchings(const BipartiteGraph& g);

// |V| = |F| and |adj(S)| >= |S| for every nonempty S of the endogenous constraints.
bool hall_oracle(const BipartiteGraph& g);

// True when some augmenting path exists, by exhaustive simple-path search.
bool has_augmenting_path(const BipartiteGraph& g, const Matching& m);

// Enumerates every simple path between X and Y, choosing each edge between
// consecutive vertices separately.
bool d_separated_by_paths(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z);
bool sigma_separated_by_paths(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y,
                              const VertexSet& Z);

// Every (x, y, Z) with x < y and Z from the remaining vertices, |Z| <= max_z.
struct SeparationQuery {
    VertexSet x, y, z;
};
std::vector<SeparationQuery> all_queries(const VertexSet& vertices, std::size_t max_z);

// ---- goldens -------------------------------------------------------------

using Edges = std::set<std::pair<Id, Id>>;

DirectedMixedGraph make_dmg(const VertexSet& vertices, const Edges& directed, const Edges& bidirected = {});
Matching make_matching(const Edges& edges);

DirectedClusterGraph golden_bathtub_co();
DirectedMixedGraph golden_bathtub_mo();
DirectedMixedGraph golden_bathtub_mo_endogenous();

DirectedClusterGraph golden_two_equations_co();

// Cyclic-cluster example: two perfect matchings, the oriented graphs, the
// clustered graph for the first one, the causal ordering graph, its Markov
// ordering graph and three latent projections.
Matching cyclic_matching_identity();
Matching cyclic_matching_rotated();
DirectedMixedGraph golden_cyclic_oriented_identity();
DirectedMixedGraph golden_cyclic_oriented_rotated();
DirectedClusterGraph golden_cyclic_clustered_identity();
DirectedClusterGraph golden_cyclic_co();
DirectedMixedGraph golden_cyclic_mo();
DirectedMixedGraph golden_cyclic_mo_without_exogenous();
DirectedMixedGraph golden_cyclic_identity_projection();
DirectedMixedGraph golden_cyclic_rotated_projection();

// Example with all three parts of the coarse decomposition.
CoarseDecomposition golden_mixed_decomposition();
std::vector<Matching> mixed_maximum_matchings();
DirectedClusterGraph golden_mixed_co();
DirectedMixedGraph golden_mixed_mo();
DirectedMixedGraph golden_mixed_mo_restricted();

DirectedClusterGraph golden_two_by_two_co();
BipartiteGraph golden_two_by_two_intervened();
DirectedClusterGraph golden_two_by_two_do();

struct EffectRow {
    std::vector<Id> constraints;
    std::vector<Id> variables;
    VertexSet generic;
    VertexSet none;
};
std::vector<EffectRow> bathtub_soft_rows();
std::vector<EffectRow> bathtub_perfect_rows();
// Descendants / non-descendants per endogenous variable in the SCM graph.
std::vector<EffectRow> bathtub_scm_rows();

}  // namespace causalorder::testing
