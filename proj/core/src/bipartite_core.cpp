#include "causalorder/bipartite_core.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>

#include "causalorder/errors.hpp"
#include "indexed.hpp"

namespace causalorder {

using detail::IndexedBipartite;

std::optional<Id> Matching::mate(const Id& x) const {
    for (const auto& [v, f] : edges) {
        if (v == x) return f;
        if (f == x) return v;
    }
    return std::nullopt;
}

VertexSet Matching::mates(const VertexSet& xs) const {
    VertexSet out;
    for (const auto& [v, f] : edges) {
        if (xs.count(v)) out.insert(f);
        if (xs.count(f)) out.insert(v);
    }
    return out;
}

bool is_matching(const BipartiteGraph& graph, const Matching& m) {
    VertexSet seen;
    for (const auto& e : m.edges) {
        if (!graph.E.count(e)) return false;
        if (!seen.insert(e.first).second) return false;
        if (!seen.insert(e.second).second) return false;
    }
    return true;
}

namespace {

constexpr int kFree = -1;

struct HopcroftKarp {
    const IndexedBipartite& g;
    std::vector<int> match_var;  // var -> con
    std::vector<int> match_con;  // con -> var
    std::vector<int> layer;

    explicit HopcroftKarp(const IndexedBipartite& ig)
        : g(ig), match_var(ig.vars.size(), kFree), match_con(ig.cons.size(), kFree), layer(ig.vars.size()) {}

    bool bfs() {
        std::deque<int> queue;
        bool found = false;
        for (std::size_t v = 0; v < g.vars.size(); ++v) {
            if (match_var[v] == kFree) {
                layer[v] = 0;
                queue.push_back(static_cast<int>(v));
            } else {
                layer[v] = std::numeric_limits<int>::max();
            }
        }
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int f : g.var_adj[v]) {
                int u = match_con[f];
                if (u == kFree) {
                    found = true;
                } else if (layer[u] == std::numeric_limits<int>::max()) {
                    layer[u] = layer[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        return found;
    }

    bool dfs(int v) {
        for (int f : g.var_adj[v]) {
            int u = match_con[f];
            if (u == kFree || (layer[u] == layer[v] + 1 && dfs(u))) {
                match_var[v] = f;
                match_con[f] = v;
                return true;
            }
        }
        layer[v] = std::numeric_limits<int>::max();
        return false;
    }

    void run() {
        while (bfs()) {
            for (std::size_t v = 0; v < g.vars.size(); ++v)
                if (match_var[v] == kFree) dfs(static_cast<int>(v));
        }
    }
};

// Adjacency of each constraint as a bitmask over variable indices.
std::vector<std::uint32_t> constraint_masks(const IndexedBipartite& g) {
    std::vector<std::uint32_t> masks(g.cons.size(), 0);
    for (std::size_t j = 0; j < g.cons.size(); ++j)
        for (int i : g.con_adj[j]) masks[j] |= (std::uint32_t{1} << i);
    return masks;
}

// adj[S] for every subset S of constraints, built from the lowest set bit.
std::vector<std::uint32_t> subset_adjacency(const std::vector<std::uint32_t>& masks) {
    std::size_t n = masks.size();
    std::vector<std::uint32_t> adj(std::size_t{1} << n, 0);
    for (std::uint32_t s = 1; s < adj.size(); ++s) {
        int low = std::countr_zero(s);
        adj[s] = adj[s & (s - 1)] | masks[low];
    }
    return adj;
}

void check_cap(const BipartiteGraph& graph, const char* what) {
    if (graph.F.size() > kBruteForceCap)
        throw SizeLimitError(std::string(what) + ": " + std::to_string(graph.F.size()) +
                             " constraints exceed the brute-force cap of " + std::to_string(kBruteForceCap));
}

}  // namespace

bool is_self_contained(const BipartiteGraph& graph) {
    if (graph.V.size() != graph.F.size()) return false;
    return maximum_matching(graph).size() == graph.F.size();
}

bool hall_check_bruteforce(const BipartiteGraph& graph) {
    check_cap(graph, "hall check");
    if (graph.V.size() != graph.F.size()) return false;
    IndexedBipartite g(graph);
    auto adj = subset_adjacency(constraint_masks(g));
    for (std::uint32_t s = 1; s < adj.size(); ++s)
        if (std::popcount(adj[s]) < std::popcount(s)) return false;
    return true;
}

std::set<VertexSet> minimal_self_contained_sets(const BipartiteGraph& graph) {
    check_cap(graph, "minimal self-contained sets");
    if (!hall_check_bruteforce(graph)) throw DomainError("graph is not self-contained");
    IndexedBipartite g(graph);
    auto adj = subset_adjacency(constraint_masks(g));
    const std::size_t n = g.cons.size();

    // In a graph satisfying the Hall property every subset does too, so a
    // subset is self-contained exactly when |adj(S)| = |S|.
    std::vector<std::uint32_t> found;
    for (std::size_t size = 1; size <= n; ++size) {
        for (std::uint32_t s = 1; s < adj.size(); ++s) {
            if (static_cast<std::size_t>(std::popcount(s)) != size) continue;
            if (std::popcount(adj[s]) != std::popcount(s)) continue;
            bool superset = std::any_of(found.begin(), found.end(), [s](std::uint32_t t) { return (s & t) == t; });
            if (!superset) found.push_back(s);
        }
    }
    std::set<VertexSet> out;
    for (auto s : found) {
        VertexSet set;
        for (std::size_t j = 0; j < n; ++j)
            if (s & (std::uint32_t{1} << j)) set.insert(g.cons[j]);
        out.insert(std::move(set));
    }
    return out;
}

Matching maximum_matching(const BipartiteGraph& graph) {
    IndexedBipartite g(endogenous_subgraph(graph));
    HopcroftKarp hk(g);
    hk.run();
    Matching m;
    for (std::size_t v = 0; v < g.vars.size(); ++v)
        if (hk.match_var[v] != kFree) m.edges.emplace(g.vars[v], g.cons[hk.match_var[v]]);
    return m;
}

Matching perfect_matching(const BipartiteGraph& graph) {
    Matching m = maximum_matching(graph);
    if (graph.endogenous().size() != graph.F.size() || m.size() != graph.F.size())
        throw DomainError("no perfect matching: graph is not self-contained");
    return m;
}

VertexSet alternating_reachable(const BipartiteGraph& graph, const Matching& matching, const VertexSet& seeds) {
    if (seeds.empty()) return {};
    if (!is_matching(graph, matching)) throw InvalidArgument("not a matching of the graph");
    bool from_vars = graph.is_variable(*seeds.begin());
    for (const auto& s : seeds) {
        if (!graph.contains(s)) throw InvalidArgument("unknown vertex '" + s + "'");
        if (graph.is_variable(s) != from_vars) throw InvalidArgument("seeds must lie on one side of the graph");
        if (matching.covers(s)) throw InvalidArgument("seed '" + s + "' is matched");
    }

    IndexedBipartite g(graph);
    const int nv = static_cast<int>(g.vars.size());
    // Vertex k < nv is a variable, k >= nv the constraint k - nv.
    std::vector<int> mate(g.vars.size() + g.cons.size(), kFree);
    for (const auto& [v, f] : matching.edges) {
        int a = g.var_index.at(v);
        int b = nv + g.con_index.at(f);
        mate[a] = b;
        mate[b] = a;
    }
    std::vector<char> seen(mate.size(), 0);
    std::deque<int> queue;
    for (const auto& s : seeds) {
        int k = from_vars ? g.var_index.at(s) : nv + g.con_index.at(s);
        seen[k] = 1;
        queue.push_back(k);
    }
    while (!queue.empty()) {
        int k = queue.front();
        queue.pop_front();
        bool is_var = k < nv;
        if (is_var == from_vars) {
            const auto& nbrs = is_var ? g.var_adj[k] : g.con_adj[k - nv];
            for (int j : nbrs) {
                int u = is_var ? nv + j : j;
                if (mate[k] == u || seen[u]) continue;
                seen[u] = 1;
                queue.push_back(u);
            }
        } else if (mate[k] != kFree && !seen[mate[k]]) {
            seen[mate[k]] = 1;
            queue.push_back(mate[k]);
        }
    }
    VertexSet out;
    for (int k = 0; k < static_cast<int>(seen.size()); ++k)
        if (seen[k]) out.insert(k < nv ? g.vars[k] : g.cons[k - nv]);
    return out;
}

CoarseDecomposition coarse_decomposition(const BipartiteGraph& graph) {
    return coarse_decomposition(graph, maximum_matching(graph));
}

CoarseDecomposition coarse_decomposition(const BipartiteGraph& full, const Matching& matching) {
    BipartiteGraph graph = endogenous_subgraph(full);
    if (!is_matching(graph, matching)) throw InvalidArgument("not a matching of the graph");
    if (matching.size() != maximum_matching(graph).size()) throw InvalidArgument("matching is not maximum");
    VertexSet free_vars, free_cons;
    for (const auto& v : graph.V)
        if (!matching.covers(v)) free_vars.insert(v);
    for (const auto& f : graph.F)
        if (!matching.covers(f)) free_cons.insert(f);
    CoarseDecomposition cd;
    cd.T_I = alternating_reachable(graph, matching, free_vars);
    cd.T_O = alternating_reachable(graph, matching, free_cons);
    for (const auto& x : graph.vertices())
        if (!cd.T_I.count(x) && !cd.T_O.count(x)) cd.T_C.insert(x);
    return cd;
}

}  // namespace causalorder
