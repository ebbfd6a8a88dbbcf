#include "causalorder/mixed_graph.hpp"

#include <algorithm>
#include <deque>

#include "causalorder/errors.hpp"
#include "indexed.hpp"

namespace causalorder {

void DirectedMixedGraph::add_directed(const Id& a, const Id& b) {
    vertices.insert(a);
    vertices.insert(b);
    directed.emplace(a, b);
}

void DirectedMixedGraph::add_bidirected(const Id& a, const Id& b) {
    if (a == b) throw ValidationError("bidirected self-loop at '" + a + "'");
    vertices.insert(a);
    vertices.insert(b);
    bidirected.emplace(std::min(a, b), std::max(a, b));
}

bool DirectedMixedGraph::has_bidirected(const Id& a, const Id& b) const {
    return bidirected.count({std::min(a, b), std::max(a, b)}) > 0;
}

VertexSet DirectedMixedGraph::parents(const Id& v) const {
    VertexSet out;
    for (const auto& [a, b] : directed)
        if (b == v) out.insert(a);
    return out;
}

VertexSet DirectedMixedGraph::children(const Id& v) const {
    VertexSet out;
    for (const auto& [a, b] : directed)
        if (a == v) out.insert(b);
    return out;
}

namespace {

VertexSet reach(const std::set<std::pair<Id, Id>>& edges, const VertexSet& seeds, bool forward) {
    std::map<Id, std::vector<Id>> next;
    for (const auto& [a, b] : edges) {
        if (forward)
            next[a].push_back(b);
        else
            next[b].push_back(a);
    }
    VertexSet seen = seeds;
    std::deque<Id> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
        Id x = queue.front();
        queue.pop_front();
        auto it = next.find(x);
        if (it == next.end()) continue;
        for (const auto& y : it->second)
            if (seen.insert(y).second) queue.push_back(y);
    }
    return seen;
}

}  // namespace

VertexSet DirectedMixedGraph::ancestors(const VertexSet& s) const { return reach(directed, s, false); }

VertexSet DirectedMixedGraph::descendants(const VertexSet& s) const { return reach(directed, s, true); }

std::map<Id, VertexSet> DirectedMixedGraph::scc_map() const {
    std::vector<Id> ids(vertices.begin(), vertices.end());
    std::map<Id, int> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(ids.size());
    for (const auto& [a, b] : directed) adj[index.at(a)].push_back(index.at(b));
    std::map<Id, VertexSet> out;
    for (const auto& comp : detail::strongly_connected_components(adj)) {
        VertexSet members;
        for (int k : comp) members.insert(ids[k]);
        for (int k : comp) out[ids[k]] = members;
    }
    return out;
}

bool DirectedMixedGraph::is_acyclic() const {
    for (const auto& [a, b] : directed)
        if (a == b) return false;
    for (const auto& [v, comp] : scc_map())
        if (comp.size() > 1) return false;
    return true;
}

DirectedMixedGraph DirectedMixedGraph::induced(const VertexSet& keep) const {
    DirectedMixedGraph out;
    for (const auto& v : keep)
        if (vertices.count(v)) out.vertices.insert(v);
    for (const auto& e : directed)
        if (out.vertices.count(e.first) && out.vertices.count(e.second)) out.directed.insert(e);
    for (const auto& e : bidirected)
        if (out.vertices.count(e.first) && out.vertices.count(e.second)) out.bidirected.insert(e);
    return out;
}

void DirectedMixedGraph::validate() const {
    for (const auto& [a, b] : directed)
        if (!vertices.count(a) || !vertices.count(b))
            throw ValidationError("directed edge " + a + " -> " + b + " has an undeclared endpoint");
    for (const auto& [a, b] : bidirected) {
        if (!vertices.count(a) || !vertices.count(b))
            throw ValidationError("bidirected edge " + a + " <-> " + b + " has an undeclared endpoint");
        if (a == b) throw ValidationError("bidirected self-loop at '" + a + "'");
    }
}

namespace detail {

std::vector<std::vector<int>> strongly_connected_components(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> comps;
    int counter = 0;

    // Iterative Tarjan: frames hold (vertex, next neighbour position).
    std::vector<std::pair<int, std::size_t>> frames;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos < adj[v].size()) {
                int w = adj[v][pos++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                } while (w != v);
                comps.push_back(std::move(comp));
            }
            int finished = v;
            frames.pop_back();
            if (!frames.empty()) {
                int parent = frames.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
    return comps;
}

}  // namespace detail

}  // namespace causalorder
