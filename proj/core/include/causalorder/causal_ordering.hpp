#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "causalorder/bipartite_core.hpp"
#include "causalorder/mixed_graph.hpp"

namespace causalorder {

// Partition of vertices into clusters with edges vertex -> cluster.
// Canonical form: clusters ordered by their smallest member, edges by
// (source, target cluster index); equality compares canonical forms.
class DirectedClusterGraph {
public:
    DirectedClusterGraph() = default;

    // Each edge is (source, any member of the target cluster). Throws
    // ValidationError for overlapping or empty clusters, unknown endpoints, or
    // an edge whose source lies inside its target cluster.
    DirectedClusterGraph(std::vector<VertexSet> clusters, const std::set<std::pair<Id, Id>>& edges);

    const std::vector<VertexSet>& clusters() const { return clusters_; }
    const std::set<std::pair<Id, std::size_t>>& edges() const { return edges_; }

    bool contains(const Id& x) const { return index_.count(x) > 0; }
    std::size_t cluster_index(const Id& x) const;
    const VertexSet& cluster_of(const Id& x) const { return clusters_[cluster_index(x)]; }
    VertexSet vertices() const;
    // Vertices with an edge into cluster i.
    VertexSet parents_of(std::size_t i) const;

    bool is_quotient_acyclic() const;
    // Cluster indices in a topological order of the quotient graph, ties
    // broken by canonical index. Throws DomainError when the quotient is cyclic.
    std::vector<std::size_t> topological_order() const;

    bool operator==(const DirectedClusterGraph& other) const {
        return clusters_ == other.clusters_ && edges_ == other.edges_;
    }

private:
    std::vector<VertexSet> clusters_;
    std::set<std::pair<Id, std::size_t>> edges_;
    std::map<Id, std::size_t> index_;
};

struct MscOptions {
    // When set, each step picks a random minimal self-contained set.
    std::optional<std::uint64_t> shuffle_seed;
};

DirectedClusterGraph order_msc(const BipartiteGraph& graph, const MscOptions& options = {});

// f -> v for matched edges, v -> f otherwise; covers every edge of `graph`.
DirectedMixedGraph orient(const BipartiteGraph& graph, const Matching& matching);

DirectedClusterGraph clusterize(const DirectedMixedGraph& g);

DirectedClusterGraph merge(const DirectedClusterGraph& cg, const Matching& matching);

DirectedClusterGraph order_pm(const BipartiteGraph& graph);

// Same, with a caller-chosen perfect matching of the endogenous subgraph.
DirectedClusterGraph order_pm(const BipartiteGraph& graph, const Matching& matching);

DirectedClusterGraph order_cd(const BipartiteGraph& graph);

bool has_directed_path(const DirectedClusterGraph& dcg, const Id& x, const Id& y);

// Every vertex reachable from x along cluster paths (x's own cluster included).
VertexSet reachable_from(const DirectedClusterGraph& dcg, const Id& x);

}  // namespace causalorder
