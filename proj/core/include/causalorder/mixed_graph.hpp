#pragma once

#include <map>
#include <set>
#include <utility>

#include "causalorder/types.hpp"

namespace causalorder {

// Directed edges may be self-loops; bidirected edges are stored with
// first < second and never join a vertex to itself.
struct DirectedMixedGraph {
    VertexSet vertices;
    std::set<std::pair<Id, Id>> directed;
    std::set<std::pair<Id, Id>> bidirected;

    void add_vertex(const Id& v) { vertices.insert(v); }
    void add_directed(const Id& a, const Id& b);
    void add_bidirected(const Id& a, const Id& b);
    bool has_directed(const Id& a, const Id& b) const { return directed.count({a, b}) > 0; }
    bool has_bidirected(const Id& a, const Id& b) const;

    VertexSet parents(const Id& v) const;
    VertexSet children(const Id& v) const;
    // Both include the seed set itself.
    VertexSet ancestors(const VertexSet& s) const;
    VertexSet descendants(const VertexSet& s) const;
    // Strongly connected component of every vertex, over directed edges.
    std::map<Id, VertexSet> scc_map() const;
    bool is_acyclic() const;
    DirectedMixedGraph induced(const VertexSet& keep) const;

    // Throws ValidationError on undeclared endpoints or bidirected self-loops.
    void validate() const;

    bool operator==(const DirectedMixedGraph&) const = default;
};

}  // namespace causalorder
