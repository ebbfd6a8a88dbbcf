#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>

#include "causalorder/constraint_system.hpp"

namespace causalorder {

inline constexpr std::size_t kBruteForceCap = 20;

// Edges are (variable, constraint) pairs.
struct Matching {
    std::set<std::pair<Id, Id>> edges;

    std::size_t size() const { return edges.size(); }
    std::optional<Id> mate(const Id& x) const;
    bool covers(const Id& x) const { return mate(x).has_value(); }
    VertexSet mates(const VertexSet& xs) const;

    bool operator==(const Matching&) const = default;
};

struct CoarseDecomposition {
    VertexSet T_I;
    VertexSet T_C;
    VertexSet T_O;

    bool operator==(const CoarseDecomposition&) const = default;
};

bool is_matching(const BipartiteGraph& graph, const Matching& m);

bool is_self_contained(const BipartiteGraph& graph);

// Subset enumeration; |F| <= kBruteForceCap.
bool hall_check_bruteforce(const BipartiteGraph& graph);

// Matching-free enumeration in increasing subset size; |F| <= kBruteForceCap.
std::set<VertexSet> minimal_self_contained_sets(const BipartiteGraph& graph);

// Hopcroft-Karp with breadth-first layering, edges visited in (v, f) order.
// Exogenous variables are never matched.
Matching maximum_matching(const BipartiteGraph& graph);

// Throws DomainError when the graph has no perfect matching.
Matching perfect_matching(const BipartiteGraph& graph);

VertexSet alternating_reachable(const BipartiteGraph& graph, const Matching& matching, const VertexSet& seeds);

// Partitions the endogenous subgraph; exogenous variables are ignored.
CoarseDecomposition coarse_decomposition(const BipartiteGraph& graph);

// Uses the given matching, which must be a maximum matching of `graph`.
CoarseDecomposition coarse_decomposition(const BipartiteGraph& graph, const Matching& matching);

}  // namespace causalorder
