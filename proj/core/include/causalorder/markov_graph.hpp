#pragma once

#include <cstddef>

#include "causalorder/causal_ordering.hpp"
#include "causalorder/mixed_graph.hpp"

namespace causalorder {

inline constexpr std::size_t kPathEnumerationCap = 10;

DirectedMixedGraph decluster(const DirectedClusterGraph& dcg);

// Latent projection onto vertices \ drop.
DirectedMixedGraph marginalize(const DirectedMixedGraph& g, const VertexSet& drop);

// decluster(order_cd(graph)) with the constraint vertices projected out.
DirectedMixedGraph markov_ordering_graph(const BipartiteGraph& graph);

// The above induced on the endogenous variables of the complete and
// overcomplete parts together with every exogenous variable.
DirectedMixedGraph markov_ordering_restricted(const BipartiteGraph& graph);

// X, Y, Z must be pairwise disjoint subsets of the vertices.
bool d_separated(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z);
bool sigma_separated(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z);

// Literal enumeration of every path; at most kPathEnumerationCap vertices.
bool d_separated_bruteforce(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z);

enum class Acyclification {
    // i -> j iff i is outside scc(j) and points into scc(j); bidirected edges kept.
    directed_only,
    // Additionally i <-> j for distinct i, j sharing a component, and
    // bidirected edges lifted to whole components.
    with_component_confounding,
};

DirectedMixedGraph acyclify(const DirectedMixedGraph& g, Acyclification mode = Acyclification::directed_only);

}  // namespace causalorder
