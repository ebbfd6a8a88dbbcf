#include "causalorder/causal_ordering.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "causalorder/errors.hpp"
#include "indexed.hpp"

namespace causalorder {

DirectedClusterGraph::DirectedClusterGraph(std::vector<VertexSet> clusters, const std::set<std::pair<Id, Id>>& edges) {
    for (const auto& c : clusters)
        if (c.empty()) throw ValidationError("empty cluster");
    std::sort(clusters.begin(), clusters.end(),
              [](const VertexSet& a, const VertexSet& b) { return *a.begin() < *b.begin(); });
    clusters_ = std::move(clusters);
    for (std::size_t i = 0; i < clusters_.size(); ++i)
        for (const auto& x : clusters_[i])
            if (!index_.emplace(x, i).second) throw ValidationError("vertex '" + x + "' lies in two clusters");
    for (const auto& [source, member] : edges) {
        auto s = index_.find(source);
        auto t = index_.find(member);
        if (s == index_.end() || t == index_.end())
            throw ValidationError("cluster edge " + source + " -> " + member + " has an unknown endpoint");
        if (s->second == t->second)
            throw ValidationError("cluster edge from '" + source + "' into its own cluster");
        edges_.emplace(source, t->second);
    }
}

std::size_t DirectedClusterGraph::cluster_index(const Id& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) throw InvalidArgument("unknown vertex '" + x + "'");
    return it->second;
}

VertexSet DirectedClusterGraph::vertices() const {
    VertexSet out;
    for (const auto& [x, i] : index_) out.insert(x);
    return out;
}

VertexSet DirectedClusterGraph::parents_of(std::size_t i) const {
    VertexSet out;
    for (const auto& [x, j] : edges_)
        if (j == i) out.insert(x);
    return out;
}

std::vector<std::size_t> DirectedClusterGraph::topological_order() const {
    const std::size_t n = clusters_.size();
    std::vector<std::set<std::size_t>> next(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& [x, j] : edges_) {
        std::size_t i = index_.at(x);
        if (next[i].insert(j).second) ++indegree[j];
    }
    std::set<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.insert(i);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        std::size_t i = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(i);
        for (std::size_t j : next[i])
            if (--indegree[j] == 0) ready.insert(j);
    }
    if (order.size() != n) throw DomainError("cluster quotient graph has a cycle");
    return order;
}

bool DirectedClusterGraph::is_quotient_acyclic() const {
    try {
        topological_order();
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

namespace {

std::uint64_t next_random(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

DirectedClusterGraph order_msc(const BipartiteGraph& graph, const MscOptions& options) {
    graph.validate();
    std::vector<VertexSet> clusters;
    std::set<std::pair<Id, Id>> edges;
    for (const auto& w : graph.W) clusters.push_back({w});

    BipartiteGraph rest = endogenous_subgraph(graph);
    if (rest.F.size() > kBruteForceCap)
        throw SizeLimitError("order_msc: " + std::to_string(rest.F.size()) +
                             " constraints exceed the brute-force cap of " + std::to_string(kBruteForceCap));
    if (!hall_check_bruteforce(rest)) throw DomainError("endogenous subgraph is not self-contained");

    std::mt19937_64 rng(options.shuffle_seed.value_or(0));
    while (!rest.V.empty() || !rest.F.empty()) {
        auto sets = minimal_self_contained_sets(rest);
        auto pick = sets.begin();
        if (options.shuffle_seed) std::advance(pick, static_cast<long>(next_random(rng, sets.size())));
        const VertexSet& s_f = *pick;

        VertexSet inner = rest.adj(s_f);
        VertexSet cluster = s_f;
        cluster.insert(inner.begin(), inner.end());
        const Id& member = *s_f.begin();
        for (const auto& v : graph.adj(s_f))
            if (!inner.count(v)) edges.emplace(v, member);
        clusters.push_back(cluster);

        VertexSet keep;
        for (const auto& x : rest.vertices())
            if (!cluster.count(x)) keep.insert(x);
        rest = induced_subgraph(rest, keep);
    }
    return DirectedClusterGraph(std::move(clusters), edges);
}

DirectedMixedGraph orient(const BipartiteGraph& graph, const Matching& matching) {
    if (!is_matching(graph, matching)) throw InvalidArgument("not a matching of the graph");
    for (const auto& [v, f] : matching.edges)
        if (graph.W.count(v)) throw InvalidArgument("matching uses exogenous vertex '" + v + "'");
    for (const auto& x : graph.vertices())
        if (!graph.W.count(x) && !matching.covers(x))
            throw InvalidArgument("matching is not perfect on the endogenous subgraph ('" + x + "' unmatched)");
    DirectedMixedGraph g;
    g.vertices = graph.vertices();
    for (const auto& e : graph.E) {
        if (matching.edges.count(e))
            g.directed.emplace(e.second, e.first);
        else
            g.directed.emplace(e.first, e.second);
    }
    return g;
}

DirectedClusterGraph clusterize(const DirectedMixedGraph& g) {
    std::vector<VertexSet> clusters;
    std::map<Id, VertexSet> scc = g.scc_map();
    VertexSet done;
    for (const auto& v : g.vertices) {
        if (done.count(v)) continue;
        const auto& comp = scc.at(v);
        done.insert(comp.begin(), comp.end());
        clusters.push_back(comp);
    }
    std::set<std::pair<Id, Id>> edges;
    for (const auto& [x, w] : g.directed)
        if (!scc.at(w).count(x)) edges.emplace(x, w);
    return DirectedClusterGraph(std::move(clusters), edges);
}

DirectedClusterGraph merge(const DirectedClusterGraph& cg, const Matching& matching) {
    std::vector<VertexSet> merged;
    std::vector<std::size_t> target(cg.clusters().size());
    std::map<VertexSet, std::size_t> seen;
    for (std::size_t i = 0; i < cg.clusters().size(); ++i) {
        const VertexSet& s = cg.clusters()[i];
        VertexSet u = s;
        VertexSet m = matching.mates(s);
        u.insert(m.begin(), m.end());
        auto [it, inserted] = seen.emplace(u, merged.size());
        if (inserted) merged.push_back(u);
        target[i] = it->second;
    }
    std::set<std::pair<Id, Id>> edges;
    for (const auto& [x, i] : cg.edges()) {
        VertexSet m = matching.mates(cg.clusters()[i]);
        if (m.count(x)) continue;
        edges.emplace(x, *merged[target[i]].begin());
    }
    return DirectedClusterGraph(std::move(merged), edges);
}

DirectedClusterGraph order_pm(const BipartiteGraph& graph) {
    graph.validate();
    BipartiteGraph inner = endogenous_subgraph(graph);
    Matching m;
    try {
        m = perfect_matching(inner);
    } catch (const DomainError&) {
        throw DomainError("endogenous subgraph is not self-contained");
    }
    return order_pm(graph, m);
}

DirectedClusterGraph order_pm(const BipartiteGraph& graph, const Matching& matching) {
    return merge(clusterize(orient(graph, matching)), matching);
}

namespace {

std::vector<VertexSet> connected_components(const BipartiteGraph& g) {
    std::map<Id, std::vector<Id>> nbrs;
    for (const auto& [v, f] : g.E) {
        nbrs[v].push_back(f);
        nbrs[f].push_back(v);
    }
    std::vector<VertexSet> out;
    VertexSet seen;
    for (const auto& start : g.vertices()) {
        if (seen.count(start)) continue;
        VertexSet comp{start};
        seen.insert(start);
        std::deque<Id> queue{start};
        while (!queue.empty()) {
            Id x = queue.front();
            queue.pop_front();
            for (const auto& y : nbrs[x])
                if (seen.insert(y).second) {
                    comp.insert(y);
                    queue.push_back(y);
                }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

DirectedClusterGraph order_cd(const BipartiteGraph& graph) {
    graph.validate();
    BipartiteGraph inner = endogenous_subgraph(graph);
    CoarseDecomposition cd = coarse_decomposition(inner);

    DirectedClusterGraph complete = order_pm(induced_subgraph(inner, cd.T_C));
    std::vector<VertexSet> clusters = complete.clusters();
    std::set<std::pair<Id, Id>> edges;
    for (const auto& [x, i] : complete.edges()) edges.emplace(x, *complete.clusters()[i].begin());
    for (auto& c : connected_components(induced_subgraph(inner, cd.T_I))) clusters.push_back(std::move(c));
    for (auto& c : connected_components(induced_subgraph(inner, cd.T_O))) clusters.push_back(std::move(c));
    for (const auto& w : graph.W) clusters.push_back({w});

    for (const auto& [v, f] : graph.E) {
        if (graph.W.count(v)) {
            edges.emplace(v, f);
        } else if (!cd.T_I.count(v) && cd.T_I.count(f)) {
            edges.emplace(v, f);
        } else if (cd.T_O.count(v) && cd.T_C.count(f)) {
            edges.emplace(v, f);
        }
    }
    return DirectedClusterGraph(std::move(clusters), edges);
}

VertexSet reachable_from(const DirectedClusterGraph& dcg, const Id& x) {
    std::vector<std::set<std::size_t>> next(dcg.clusters().size());
    for (const auto& [v, j] : dcg.edges()) next[dcg.cluster_index(v)].insert(j);
    std::size_t start = dcg.cluster_index(x);
    std::vector<char> seen(dcg.clusters().size(), 0);
    seen[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (std::size_t j : next[i])
            if (!seen[j]) {
                seen[j] = 1;
                queue.push_back(j);
            }
    }
    VertexSet out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.insert(dcg.clusters()[i].begin(), dcg.clusters()[i].end());
    return out;
}

bool has_directed_path(const DirectedClusterGraph& dcg, const Id& x, const Id& y) {
    dcg.cluster_index(y);
    return reachable_from(dcg, x).count(y) > 0;
}

}  // namespace causalorder
