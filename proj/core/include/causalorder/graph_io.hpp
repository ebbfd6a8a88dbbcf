#pragma once

#include <string>

#include "causalorder/causal_ordering.hpp"
#include "causalorder/constraint_system.hpp"
#include "causalorder/mixed_graph.hpp"

namespace causalorder {

// {"variables": [...], "constraints": [...], "exogenous": [...], "edges": [["v", "f"], ...]}
std::string bipartite_to_json(const BipartiteGraph& graph);
BipartiteGraph bipartite_from_json(const std::string& text);
std::string bipartite_to_dot(const BipartiteGraph& graph);

// {"clusters": [["a", ...], ...], "edges": [["v", cluster-index], ...]}
std::string cluster_graph_to_json(const DirectedClusterGraph& dcg);
DirectedClusterGraph cluster_graph_from_json(const std::string& text);
// Constraint vertices are boxes, exogenous vertices dashed, clusters drawn as subgraph boxes.
std::string cluster_graph_to_dot(const DirectedClusterGraph& dcg, const VertexSet& constraints,
                                 const VertexSet& exogenous);

// {"vertices": [...], "directed": [["a", "b"], ...], "bidirected": [["a", "b"], ...]}
std::string mixed_graph_to_json(const DirectedMixedGraph& g);
DirectedMixedGraph mixed_graph_from_json(const std::string& text);
std::string mixed_graph_to_dot(const DirectedMixedGraph& g, const VertexSet& exogenous = {});

}  // namespace causalorder
