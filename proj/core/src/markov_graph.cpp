#include "causalorder/markov_graph.hpp"

#include <array>
#include <deque>
#include <functional>
#include <map>
#include <vector>

#include "causalorder/errors.hpp"

namespace causalorder {

DirectedMixedGraph decluster(const DirectedClusterGraph& dcg) {
    DirectedMixedGraph g;
    g.vertices = dcg.vertices();
    for (const auto& [x, i] : dcg.edges())
        for (const auto& w : dcg.clusters()[i]) g.directed.emplace(x, w);
    return g;
}

DirectedMixedGraph marginalize(const DirectedMixedGraph& g, const VertexSet& drop) {
    for (const auto& d : drop)
        if (!g.vertices.count(d)) throw InvalidArgument("unknown vertex '" + d + "'");
    if (drop.empty()) return g;

    std::map<Id, std::vector<Id>> children, parents;
    for (const auto& [a, b] : g.directed) {
        children[a].push_back(b);
        parents[b].push_back(a);
    }
    DirectedMixedGraph out;
    for (const auto& v : g.vertices)
        if (!drop.count(v)) out.vertices.insert(v);

    // Dropped vertices with a directed path into x running through dropped vertices only.
    std::map<Id, VertexSet> hidden_ancestors;
    for (const auto& x : out.vertices) {
        VertexSet seen;
        std::deque<Id> queue{x};
        while (!queue.empty()) {
            Id y = queue.front();
            queue.pop_front();
            for (const auto& p : parents[y])
                if (drop.count(p) && seen.insert(p).second) queue.push_back(p);
        }
        hidden_ancestors[x] = std::move(seen);
    }

    for (const auto& x : out.vertices) {
        VertexSet seen;
        std::deque<Id> queue{x};
        while (!queue.empty()) {
            Id y = queue.front();
            queue.pop_front();
            for (const auto& c : children[y]) {
                if (!drop.count(c))
                    out.directed.emplace(x, c);
                else if (seen.insert(c).second)
                    queue.push_back(c);
            }
        }
    }

    for (auto xi = out.vertices.begin(); xi != out.vertices.end(); ++xi) {
        for (auto yi = std::next(xi); yi != out.vertices.end(); ++yi) {
            const auto& ax = hidden_ancestors[*xi];
            const auto& ay = hidden_ancestors[*yi];
            bool linked = false;
            for (const auto& a : ax)
                if (ay.count(a)) {
                    linked = true;
                    break;
                }
            if (!linked) {
                VertexSet ex = ax, ey = ay;
                ex.insert(*xi);
                ey.insert(*yi);
                for (const auto& [a, b] : g.bidirected)
                    if ((ex.count(a) && ey.count(b)) || (ex.count(b) && ey.count(a))) {
                        linked = true;
                        break;
                    }
            }
            if (linked) out.bidirected.emplace(*xi, *yi);
        }
    }
    return out;
}

DirectedMixedGraph markov_ordering_graph(const BipartiteGraph& graph) {
    return marginalize(decluster(order_cd(graph)), graph.F);
}

DirectedMixedGraph markov_ordering_restricted(const BipartiteGraph& graph) {
    CoarseDecomposition cd = coarse_decomposition(endogenous_subgraph(graph));
    VertexSet keep = graph.W;
    for (const auto& v : graph.V)
        if (!cd.T_I.count(v)) keep.insert(v);
    return markov_ordering_graph(graph).induced(keep);
}

namespace {

enum class Mark { tail, head };

struct Incidence {
    int other;
    Mark here;
    Mark there;
};

struct Prepared {
    std::vector<Id> ids;
    std::map<Id, int> index;
    std::vector<std::vector<Incidence>> inc;
    std::vector<int> component;
    std::vector<char> in_z;
    std::vector<char> in_y;
    std::vector<char> ancestor_of_z;
};

Prepared prepare(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z) {
    for (const auto* s : {&X, &Y, &Z})
        for (const auto& v : *s)
            if (!g.vertices.count(v)) throw InvalidArgument("unknown vertex '" + v + "'");
    for (const auto& v : X)
        if (Y.count(v) || Z.count(v)) throw InvalidArgument("query sets overlap at '" + v + "'");
    for (const auto& v : Y)
        if (Z.count(v)) throw InvalidArgument("query sets overlap at '" + v + "'");

    Prepared p;
    p.ids.assign(g.vertices.begin(), g.vertices.end());
    for (std::size_t i = 0; i < p.ids.size(); ++i) p.index[p.ids[i]] = static_cast<int>(i);
    const std::size_t n = p.ids.size();
    p.inc.resize(n);
    for (const auto& [a, b] : g.directed) {
        if (a == b) continue;
        int i = p.index.at(a), j = p.index.at(b);
        p.inc[i].push_back({j, Mark::tail, Mark::head});
        p.inc[j].push_back({i, Mark::head, Mark::tail});
    }
    for (const auto& [a, b] : g.bidirected) {
        int i = p.index.at(a), j = p.index.at(b);
        p.inc[i].push_back({j, Mark::head, Mark::head});
        p.inc[j].push_back({i, Mark::head, Mark::head});
    }
    p.component.assign(n, -1);
    int next_component = 0;
    std::map<Id, int> comp_of;
    for (const auto& [v, comp] : g.scc_map()) {
        int c;
        auto it = comp_of.find(*comp.begin());
        if (it == comp_of.end()) {
            c = next_component++;
            comp_of[*comp.begin()] = c;
        } else {
            c = it->second;
        }
        p.component[p.index.at(v)] = c;
    }
    p.in_z.assign(n, 0);
    p.in_y.assign(n, 0);
    p.ancestor_of_z.assign(n, 0);
    for (const auto& v : Z) p.in_z[p.index.at(v)] = 1;
    for (const auto& v : Y) p.in_y[p.index.at(v)] = 1;
    for (const auto& v : g.ancestors(Z)) p.ancestor_of_z[p.index.at(v)] = 1;
    return p;
}

// How the walk entered a vertex: through an arrowhead, or through a tail
// whose other end is inside / outside the vertex's component.
enum Arrival { kHead = 0, kTailInside = 1, kTailOutside = 2 };

Arrival arrival_at(const Prepared& p, int prev, int v, Mark mark_at_v) {
    if (mark_at_v == Mark::head) return kHead;
    return p.component[prev] == p.component[v] ? kTailInside : kTailOutside;
}

bool separated_by_reachability(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y,
                               const VertexSet& Z, bool sigma) {
    Prepared p = prepare(g, X, Y, Z);
    const std::size_t n = p.ids.size();
    std::vector<std::array<char, 3>> seen(n, {0, 0, 0});
    std::deque<std::pair<int, Arrival>> queue;
    for (const auto& x : X) {
        int i = p.index.at(x);
        for (const auto& e : p.inc[i]) {
            if (p.in_y[e.other]) return false;
            Arrival a = arrival_at(p, i, e.other, e.there);
            if (!seen[e.other][a]) {
                seen[e.other][a] = 1;
                queue.emplace_back(e.other, a);
            }
        }
    }
    while (!queue.empty()) {
        auto [v, a] = queue.front();
        queue.pop_front();
        for (const auto& e : p.inc[v]) {
            bool collider = a == kHead && e.here == Mark::head;
            bool open;
            if (collider) {
                open = p.ancestor_of_z[v];
            } else if (!p.in_z[v]) {
                open = true;
            } else if (!sigma) {
                open = false;
            } else {
                bool tail_out = a == kTailOutside || (e.here == Mark::tail && p.component[e.other] != p.component[v]);
                open = !tail_out;
            }
            if (!open) continue;
            if (p.in_y[e.other]) return false;
            Arrival next = arrival_at(p, v, e.other, e.there);
            if (!seen[e.other][next]) {
                seen[e.other][next] = 1;
                queue.emplace_back(e.other, next);
            }
        }
    }
    return true;
}

}  // namespace

bool d_separated(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z) {
    return separated_by_reachability(g, X, Y, Z, false);
}

bool sigma_separated(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z) {
    return separated_by_reachability(g, X, Y, Z, true);
}

bool d_separated_bruteforce(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y,
                            const VertexSet& Z) {
    if (g.vertices.size() > kPathEnumerationCap)
        throw SizeLimitError("path enumeration is capped at " + std::to_string(kPathEnumerationCap) + " vertices");
    Prepared p = prepare(g, X, Y, Z);

    std::vector<int> path;
    std::vector<const Incidence*> steps;  // steps[k] joins path[k] and path[k+1]
    std::vector<char> on_path(p.ids.size(), 0);

    auto blocked = [&]() {
        const std::size_t len = path.size();
        if (p.in_z[path.front()] || p.in_z[path.back()]) return true;
        for (std::size_t k = 1; k + 1 < len; ++k) {
            int v = path[k];
            Mark before = steps[k - 1]->there;
            Mark after = steps[k]->here;
            bool collider = before == Mark::head && after == Mark::head;
            if (collider && !p.ancestor_of_z[v]) return true;
            if (p.in_z[v] && (before == Mark::tail || after == Mark::tail)) return true;
        }
        return false;
    };

    std::function<bool(int)> open_path_from = [&](int v) -> bool {
        if (path.size() > 1 && p.in_y[v]) return !blocked();
        for (const auto& e : p.inc[v]) {
            if (on_path[e.other]) continue;
            path.push_back(e.other);
            steps.push_back(&e);
            on_path[e.other] = 1;
            bool found = open_path_from(e.other);
            on_path[e.other] = 0;
            steps.pop_back();
            path.pop_back();
            if (found) return true;
        }
        return false;
    };

    for (const auto& x : X) {
        int i = p.index.at(x);
        path = {i};
        on_path[i] = 1;
        bool found = open_path_from(i);
        on_path[i] = 0;
        if (found) return false;
    }
    return true;
}

DirectedMixedGraph acyclify(const DirectedMixedGraph& g, Acyclification mode) {
    auto scc = g.scc_map();
    DirectedMixedGraph out;
    out.vertices = g.vertices;
    for (const auto& [i, k] : g.directed)
        for (const auto& j : scc.at(k))
            if (!scc.at(j).count(i)) out.directed.emplace(i, j);
    if (mode == Acyclification::directed_only) {
        out.bidirected = g.bidirected;
        return out;
    }
    for (const auto& [a, b] : g.bidirected)
        for (const auto& i : scc.at(a))
            for (const auto& j : scc.at(b))
                if (i != j) out.add_bidirected(i, j);
    for (const auto& [v, comp] : scc)
        for (const auto& u : comp)
            if (u != v) out.add_bidirected(u, v);
    return out;
}

}  // namespace causalorder
