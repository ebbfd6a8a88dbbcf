#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>

#include "causalorder/graph_io.hpp"
#include "causalorder/numeric_verify.hpp"

namespace causalorder::testing {

std::string fixture_path(const std::string& name) { return std::string(CAUSALORDER_FIXTURE_DIR) + "/" + name; }

SystemOfConstraints load_fixture(const std::string& name) { return load_system(fixture_path(name)); }

BipartiteGraph fixture_graph(const std::string& name) { return bipartite_of(load_fixture(name)); }

DirectedMixedGraph load_graph_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return mixed_graph_from_json(text);
}

namespace {

Id vid(std::size_t i) { return "v_" + std::to_string(i); }
Id fid(std::size_t i) { return "f_" + std::to_string(i); }
Id wid(std::size_t i) { return "w_" + std::to_string(i); }

bool bernoulli(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

void add_exogenous(Rng& rng, BipartiteGraph& g, std::size_t max_w) {
    if (g.F.empty() || max_w == 0) return;
    std::vector<Id> fs(g.F.begin(), g.F.end());
    std::size_t n_w = pick(rng, max_w + 1);
    for (std::size_t i = 0; i < n_w; ++i) {
        Id w = wid(i);
        g.V.insert(w);
        g.W.insert(w);
        g.E.emplace(w, fs[pick(rng, fs.size())]);
        if (bernoulli(rng, 0.3)) g.E.emplace(w, fs[pick(rng, fs.size())]);
    }
}

}  // namespace

BipartiteGraph random_bipartite(Rng& rng, std::size_t n_v, std::size_t n_f, double density, std::size_t max_w) {
    BipartiteGraph g;
    for (std::size_t i = 0; i < n_v; ++i) g.V.insert(vid(i));
    for (std::size_t j = 0; j < n_f; ++j) g.F.insert(fid(j));
    for (std::size_t i = 0; i < n_v; ++i)
        for (std::size_t j = 0; j < n_f; ++j)
            if (bernoulli(rng, density)) g.E.emplace(vid(i), fid(j));
    add_exogenous(rng, g, max_w);
    return g;
}

BipartiteGraph random_self_contained(Rng& rng, std::size_t n, double density, std::size_t max_w) {
    BipartiteGraph g = random_bipartite(rng, n, n, density, 0);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t i = 0; i < n; ++i) g.E.emplace(vid(i), fid(perm[i]));
    add_exogenous(rng, g, max_w);
    return g;
}

std::vector<BipartiteGraph> all_self_contained(std::size_t n) {
    std::vector<BipartiteGraph> out;
    std::vector<std::size_t> perm(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
        auto edge = [&](std::size_t i, std::size_t j) { return (mask >> (i * n + j)) & 1u; };
        std::iota(perm.begin(), perm.end(), 0);
        bool perfect = false;
        do {
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) ok = edge(i, perm[i]);
            perfect = ok;
        } while (!perfect && std::next_permutation(perm.begin(), perm.end()));
        if (!perfect) continue;
        BipartiteGraph g;
        for (std::size_t i = 0; i < n; ++i) {
            g.V.insert(vid(i));
            g.F.insert(fid(i));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (edge(i, j)) g.E.emplace(vid(i), fid(j));
        out.push_back(std::move(g));
    }
    return out;
}

DirectedMixedGraph random_dmg(Rng& rng, std::size_t n, double p_directed, double p_bidirected) {
    DirectedMixedGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex("x" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && bernoulli(rng, p_directed)) g.add_directed("x" + std::to_string(i), "x" + std::to_string(j));
            if (i < j && bernoulli(rng, p_bidirected))
                g.add_bidirected("x" + std::to_string(i), "x" + std::to_string(j));
        }
    return g;
}

double random_coefficient(Rng& rng) {
    double magnitude = std::uniform_real_distribution<double>(0.5, 2.0)(rng);
    return bernoulli(rng, 0.5) ? magnitude : -magnitude;
}

SystemOfConstraints random_linear_system(Rng& rng, std::size_t n) {
    for (;;) {
        BipartiteGraph g = random_self_contained(rng, n, 0.3, 0);
        SystemOfConstraints s;
        for (const auto& v : g.V) s.variables.push_back({v, false, Domain::real, std::nullopt});
        for (std::size_t j = 0; j < n; ++j) {
            ConstraintDecl c{fid(j), {}, Form::linear, {}, 0.0};
            for (const auto& [v, f] : g.E)
                if (f == c.id) {
                    c.variables.insert(v);
                    c.coefficients[v] = random_coefficient(rng);
                }
            Id w = wid(j);
            s.variables.push_back({w, true, Domain::real, ExogenousDistribution{}});
            c.variables.insert(w);
            c.coefficients[w] = 1.0;
            s.constraints.push_back(std::move(c));
        }
        if (n >= 2 && bernoulli(rng, 0.5)) {
            Id shared = "w_shared";
            s.variables.push_back({shared, true, Domain::real, ExogenousDistribution{}});
            std::size_t a = pick(rng, n), b = pick(rng, n);
            for (std::size_t j : {a, b}) {
                s.constraints[j].variables.insert(shared);
                s.constraints[j].coefficients[shared] = random_coefficient(rng);
            }
        }
        bool good = true;
        for (const auto& r : check_solvability(s)) good = good && r.unique && r.condition > 1e-3;
        if (good) return s;
    }
}

// ---- oracles -------------------------------------------------------------

namespace {

std::vector<Matching> enumerate_matchings(const BipartiteGraph& g, bool perfect_only) {
    BipartiteGraph endo = endogenous_subgraph(g);
    std::vector<Id> fs(endo.F.begin(), endo.F.end());
    std::map<Id, std::vector<Id>> adj;
    for (const auto& [v, f] : endo.E) adj[f].push_back(v);
    std::vector<Matching> best;
    std::size_t best_size = 0;
    std::set<Id> used;
    Matching current;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (current.size() + (fs.size() - k) < best_size) return;
        if (k == fs.size()) {
            if (current.size() > best_size) {
                best_size = current.size();
                best.clear();
            }
            best.push_back(current);
            return;
        }
        const Id& f = fs[k];
        for (const auto& v : adj[f]) {
            if (used.count(v)) continue;
            used.insert(v);
            current.edges.emplace(v, f);
            rec(k + 1);
            current.edges.erase({v, f});
            used.erase(v);
        }
        if (!perfect_only) rec(k + 1);
    };
    rec(0);
    if (perfect_only) {
        std::size_t nv = endo.V.size();
        std::vector<Matching> out;
        for (auto& m : best)
            if (m.size() == nv && m.size() == fs.size()) out.push_back(std::move(m));
        return out;
    }
    return best;
}

}  // namespace

std::vector<Matching> all_maximum_matchings(const BipartiteGraph& g) { return enumerate_matchings(g, false); }

std::vector<Matching> all_perfect_matchings(const BipartiteGraph& g) { return enumerate_matchings(g, true); }

bool hall_oracle(const BipartiteGraph& g) {
    BipartiteGraph endo = endogenous_subgraph(g);
    if (endo.V.size() != endo.F.size()) return false;
    std::vector<Id> fs(endo.F.begin(), endo.F.end());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << fs.size()); ++mask) {
        VertexSet s, nbrs;
        for (std::size_t i = 0; i < fs.size(); ++i)
            if ((mask >> i) & 1u) s.insert(fs[i]);
        for (const auto& [v, f] : endo.E)
            if (s.count(f)) nbrs.insert(v);
        if (nbrs.size() < s.size()) return false;
    }
    return true;
}

bool has_augmenting_path(const BipartiteGraph& g, const Matching& m) {
    BipartiteGraph endo = endogenous_subgraph(g);
    std::set<Id> visited;
    // Alternating simple paths from free variables: non-matching edge to f, then matching edge back.
    std::function<bool(const Id&)> from_variable = [&](const Id& v) {
        for (const auto& f : endo.adj(v)) {
            if (visited.count(f) || m.edges.count({v, f})) continue;
            auto mate = m.mate(f);
            if (!mate) return true;
            if (visited.count(*mate)) continue;
            visited.insert(f);
            visited.insert(*mate);
            if (from_variable(*mate)) return true;
            visited.erase(f);
            visited.erase(*mate);
        }
        return false;
    };
    for (const auto& v : endo.V) {
        if (m.covers(v)) continue;
        visited = {v};
        if (from_variable(v)) return true;
    }
    return false;
}

namespace {

struct Step {
    Id to;
    bool head_at_from;  // arrowhead at the current vertex
    bool head_at_to;
};

std::vector<Step> steps_from(const DirectedMixedGraph& g, const Id& c) {
    std::vector<Step> out;
    for (const auto& [a, b] : g.directed) {
        if (a == b) continue;
        if (a == c) out.push_back({b, false, true});
        if (b == c) out.push_back({a, true, false});
    }
    for (const auto& [a, b] : g.bidirected) {
        if (a == c) out.push_back({b, true, true});
        if (b == c) out.push_back({a, true, true});
    }
    return out;
}

bool separated_by_paths(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z,
                        bool sigma) {
    VertexSet anz = g.ancestors(Z);
    auto scc = g.scc_map();
    std::map<Id, std::vector<Step>> steps;
    for (const auto& v : g.vertices) steps[v] = steps_from(g, v);
    std::set<Id> on_path;

    // `arrived_head` is the arrowhead at `c` on the edge we came in by;
    // `prev` is the previous vertex.
    std::function<bool(const Id&, const Id&, bool)> open_from = [&](const Id& c, const Id& prev, bool arrived_head) {
        for (const auto& s : steps[c]) {
            if (on_path.count(s.to)) continue;
            if (!prev.empty()) {
                bool collider = arrived_head && s.head_at_from;
                if (collider) {
                    if (!anz.count(c)) continue;
                } else if (Z.count(c)) {
                    if (!sigma) continue;
                    bool blocked = false;
                    if (!s.head_at_from && !scc.at(c).count(s.to)) blocked = true;
                    if (!arrived_head && !scc.at(c).count(prev)) blocked = true;
                    if (blocked) continue;
                }
            }
            if (Y.count(s.to)) return true;
            on_path.insert(s.to);
            bool found = open_from(s.to, c, s.head_at_to);
            on_path.erase(s.to);
            if (found) return true;
        }
        return false;
    };
    for (const auto& x : X) {
        on_path = {x};
        if (open_from(x, "", false)) return false;
    }
    return true;
}

}  // namespace

bool d_separated_by_paths(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y, const VertexSet& Z) {
    return separated_by_paths(g, X, Y, Z, false);
}

bool sigma_separated_by_paths(const DirectedMixedGraph& g, const VertexSet& X, const VertexSet& Y,
                              const VertexSet& Z) {
    return separated_by_paths(g, X, Y, Z, true);
}

std::vector<SeparationQuery> all_queries(const VertexSet& vertices, std::size_t max_z) {
    std::vector<Id> vs(vertices.begin(), vertices.end());
    std::vector<SeparationQuery> out;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            std::vector<Id> rest;
            for (std::size_t k = 0; k < vs.size(); ++k)
                if (k != i && k != j) rest.push_back(vs[k]);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest.size()); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_z) continue;
                VertexSet z;
                for (std::size_t k = 0; k < rest.size(); ++k)
                    if ((mask >> k) & 1u) z.insert(rest[k]);
                out.push_back({{vs[i]}, {vs[j]}, z});
            }
        }
    return out;
}

// ---- goldens -------------------------------------------------------------

DirectedMixedGraph make_dmg(const VertexSet& vertices, const Edges& directed, const Edges& bidirected) {
    DirectedMixedGraph g;
    g.vertices = vertices;
    for (const auto& [a, b] : directed) g.add_directed(a, b);
    for (const auto& [a, b] : bidirected) g.add_bidirected(a, b);
    return g;
}

Matching make_matching(const Edges& edges) { return Matching{edges}; }

namespace {

VertexSet singleton_union(std::vector<VertexSet>& clusters, const VertexSet& ids) {
    for (const auto& id : ids) clusters.push_back({id});
    return ids;
}

const VertexSet kBathtubExogenous = {"w_I", "w_K", "w_1", "w_2", "w_3", "w_4", "w_5"};
const VertexSet kBathtubEndogenous = {"v_K", "v_I", "v_P", "v_O", "v_D"};

}  // namespace

DirectedClusterGraph golden_bathtub_co() {
    std::vector<VertexSet> clusters = {{"f_K", "v_K"}, {"f_I", "v_I"}, {"f_O", "v_P"}, {"f_D", "v_O"}, {"f_P", "v_D"}};
    singleton_union(clusters, kBathtubExogenous);
    Edges edges = {{"v_I", "f_D"}, {"v_O", "f_O"}, {"v_K", "f_O"}, {"v_P", "f_P"},
                   {"w_I", "f_I"}, {"w_K", "f_K"}, {"w_1", "f_P"}, {"w_2", "f_P"},
                   {"w_3", "f_O"}, {"w_4", "f_O"}, {"w_5", "f_D"}};
    return DirectedClusterGraph(clusters, edges);
}

DirectedMixedGraph golden_bathtub_mo() {
    VertexSet all = kBathtubEndogenous;
    all.insert(kBathtubExogenous.begin(), kBathtubExogenous.end());
    return make_dmg(all, {{"v_I", "v_O"}, {"v_O", "v_P"}, {"v_K", "v_P"}, {"v_P", "v_D"}, {"w_I", "v_I"},
                          {"w_K", "v_K"}, {"w_1", "v_D"}, {"w_2", "v_D"}, {"w_3", "v_P"}, {"w_4", "v_P"},
                          {"w_5", "v_O"}});
}

DirectedMixedGraph golden_bathtub_mo_endogenous() {
    return make_dmg(kBathtubEndogenous, {{"v_I", "v_O"}, {"v_O", "v_P"}, {"v_K", "v_P"}, {"v_P", "v_D"}});
}

DirectedClusterGraph golden_two_equations_co() {
    return DirectedClusterGraph({{"w_1"}, {"w_2"}, {"v_1", "f_1"}, {"v_2", "f_2"}},
                                {{"w_1", "f_1"}, {"v_1", "f_2"}, {"w_2", "f_2"}});
}

namespace {

const VertexSet kCyclicEndogenous = {"v_1", "v_2", "v_3", "v_4", "v_5"};
const VertexSet kCyclicConstraints = {"f_1", "f_2", "f_3", "f_4", "f_5"};
const VertexSet kCyclicExogenous = {"w_1", "w_2", "w_3", "w_4", "w_5", "w_6"};

VertexSet cyclic_all() {
    VertexSet all = kCyclicEndogenous;
    all.insert(kCyclicConstraints.begin(), kCyclicConstraints.end());
    all.insert(kCyclicExogenous.begin(), kCyclicExogenous.end());
    return all;
}

}  // namespace

Matching cyclic_matching_identity() {
    return make_matching({{"v_1", "f_1"}, {"v_2", "f_2"}, {"v_3", "f_3"}, {"v_4", "f_4"}, {"v_5", "f_5"}});
}

Matching cyclic_matching_rotated() {
    return make_matching({{"v_1", "f_1"}, {"v_2", "f_4"}, {"v_3", "f_2"}, {"v_4", "f_3"}, {"v_5", "f_5"}});
}

DirectedMixedGraph golden_cyclic_oriented_identity() {
    return make_dmg(cyclic_all(), {{"f_1", "v_1"}, {"f_2", "v_2"}, {"f_3", "v_3"}, {"f_4", "v_4"}, {"f_5", "v_5"},
                                   {"w_1", "f_1"}, {"v_1", "f_2"}, {"v_3", "f_2"}, {"w_2", "f_2"}, {"w_3", "f_2"},
                                   {"v_4", "f_3"}, {"w_4", "f_3"}, {"v_2", "f_4"}, {"w_5", "f_4"}, {"v_4", "f_5"},
                                   {"w_6", "f_5"}});
}

DirectedMixedGraph golden_cyclic_oriented_rotated() {
    return make_dmg(cyclic_all(), {{"f_1", "v_1"}, {"f_4", "v_2"}, {"f_2", "v_3"}, {"f_3", "v_4"}, {"f_5", "v_5"},
                                   {"w_1", "f_1"}, {"v_1", "f_2"}, {"v_2", "f_2"}, {"w_2", "f_2"}, {"w_3", "f_2"},
                                   {"v_3", "f_3"}, {"w_4", "f_3"}, {"v_4", "f_4"}, {"w_5", "f_4"}, {"v_4", "f_5"},
                                   {"w_6", "f_5"}});
}

DirectedClusterGraph golden_cyclic_clustered_identity() {
    std::vector<VertexSet> clusters = {{"v_1"}, {"f_1"}, {"v_5"}, {"f_5"}, {"v_2", "v_3", "v_4", "f_2", "f_3", "f_4"}};
    singleton_union(clusters, kCyclicExogenous);
    return DirectedClusterGraph(clusters, {{"w_1", "f_1"}, {"f_1", "v_1"}, {"v_1", "f_2"}, {"w_2", "f_2"},
                                           {"w_3", "f_2"}, {"w_4", "f_2"}, {"w_5", "f_2"}, {"v_4", "f_5"},
                                           {"w_6", "f_5"}, {"f_5", "v_5"}});
}

DirectedClusterGraph golden_cyclic_co() {
    std::vector<VertexSet> clusters = {{"v_1", "f_1"}, {"v_2", "v_3", "v_4", "f_2", "f_3", "f_4"}, {"v_5", "f_5"}};
    singleton_union(clusters, kCyclicExogenous);
    return DirectedClusterGraph(clusters, {{"w_1", "f_1"}, {"v_1", "f_2"}, {"w_2", "f_2"}, {"w_3", "f_2"},
                                           {"w_4", "f_2"}, {"w_5", "f_2"}, {"v_4", "f_5"}, {"w_6", "f_5"}});
}

DirectedMixedGraph golden_cyclic_mo() {
    VertexSet all = kCyclicEndogenous;
    all.insert(kCyclicExogenous.begin(), kCyclicExogenous.end());
    Edges edges = {{"w_1", "v_1"}, {"v_4", "v_5"}, {"w_6", "v_5"}};
    for (const Id& parent : {"v_1", "w_2", "w_3", "w_4", "w_5"})
        for (const Id& child : {"v_2", "v_3", "v_4"}) edges.emplace(parent, child);
    return make_dmg(all, edges);
}

DirectedMixedGraph golden_cyclic_mo_without_exogenous() {
    return make_dmg(kCyclicEndogenous, {{"v_1", "v_2"}, {"v_1", "v_3"}, {"v_1", "v_4"}, {"v_4", "v_5"}},
                    {{"v_2", "v_3"}, {"v_2", "v_4"}, {"v_3", "v_4"}});
}

DirectedMixedGraph golden_cyclic_identity_projection() {
    return make_dmg(kCyclicEndogenous,
                    {{"v_1", "v_2"}, {"v_3", "v_2"}, {"v_2", "v_4"}, {"v_4", "v_3"}, {"v_4", "v_5"}});
}

DirectedMixedGraph golden_cyclic_rotated_projection() {
    return make_dmg(kCyclicEndogenous,
                    {{"v_1", "v_3"}, {"v_2", "v_3"}, {"v_3", "v_4"}, {"v_4", "v_2"}, {"v_4", "v_5"}});
}

CoarseDecomposition golden_mixed_decomposition() {
    return {{"v_4", "v_5", "f_5"}, {"v_2", "v_3", "f_3", "f_4"}, {"v_1", "f_1", "f_2"}};
}

std::vector<Matching> mixed_maximum_matchings() {
    // v_1 pairs with f_1 or f_2; v_4 or v_5 pairs with f_5.
    std::vector<Matching> out;
    for (const Id& f : {"f_1", "f_2"})
        for (const Id& v : {"v_4", "v_5"})
            out.push_back(make_matching({{"v_1", f}, {"v_2", "f_3"}, {"v_3", "f_4"}, {v, "f_5"}}));
    return out;
}

DirectedClusterGraph golden_mixed_co() {
    std::vector<VertexSet> clusters = {{"v_1", "f_1", "f_2"}, {"v_2", "f_3"}, {"v_3", "f_4"}, {"v_4", "v_5", "f_5"}};
    singleton_union(clusters, {"w_1", "w_2", "w_3", "w_4", "w_5"});
    return DirectedClusterGraph(clusters, {{"v_1", "f_3"}, {"v_2", "f_4"}, {"v_3", "f_5"}, {"w_1", "f_1"},
                                           {"w_2", "f_1"}, {"w_3", "f_3"}, {"w_4", "f_4"}, {"w_5", "f_5"}});
}

DirectedMixedGraph golden_mixed_mo() {
    return make_dmg({"v_1", "v_2", "v_3", "v_4", "v_5", "w_1", "w_2", "w_3", "w_4", "w_5"},
                    {{"w_1", "v_1"}, {"w_2", "v_1"}, {"w_3", "v_2"}, {"w_4", "v_3"}, {"v_1", "v_2"},
                     {"v_2", "v_3"}, {"v_3", "v_4"}, {"v_3", "v_5"}, {"w_5", "v_4"}, {"w_5", "v_5"}});
}

DirectedMixedGraph golden_mixed_mo_restricted() {
    return make_dmg({"v_1", "v_2", "v_3", "w_1", "w_2", "w_3", "w_4", "w_5"},
                    {{"w_1", "v_1"}, {"w_2", "v_1"}, {"w_3", "v_2"}, {"w_4", "v_3"}, {"v_1", "v_2"},
                     {"v_2", "v_3"}});
}

DirectedClusterGraph golden_two_by_two_co() {
    return DirectedClusterGraph({{"v_1", "f_1"}, {"v_2", "v_3", "f_2", "f_3"}, {"v_4", "f_4"}},
                                {{"v_1", "f_2"}, {"v_3", "f_4"}});
}

BipartiteGraph golden_two_by_two_intervened() {
    BipartiteGraph g;
    g.V = {"v_1", "v_2", "v_3", "v_4"};
    g.F = {"f_1", "f_2", "f_3", "f_4"};
    g.E = {{"v_1", "f_1"}, {"v_2", "f_2"}, {"v_3", "f_3"}, {"v_3", "f_4"}, {"v_4", "f_4"}};
    return g;
}

DirectedClusterGraph golden_two_by_two_do() {
    return DirectedClusterGraph({{"v_1", "f_1"}, {"v_2", "f_2"}, {"v_3", "f_3"}, {"v_4", "f_4"}}, {{"v_3", "f_4"}});
}

std::vector<EffectRow> bathtub_soft_rows() {
    return {
        {{"f_K"}, {}, {"v_K", "v_P", "v_D"}, {"v_I", "v_O"}},
        {{"f_I"}, {}, {"v_I", "v_P", "v_O", "v_D"}, {"v_K"}},
        {{"f_P"}, {}, {"v_D"}, {"v_K", "v_I", "v_P", "v_O"}},
        {{"f_O"}, {}, {"v_P", "v_D"}, {"v_K", "v_I", "v_O"}},
        {{"f_D"}, {}, {"v_P", "v_O", "v_D"}, {"v_K", "v_I"}},
    };
}

std::vector<EffectRow> bathtub_perfect_rows() {
    return {
        {{"f_K"}, {"v_K"}, {"v_K", "v_P", "v_D"}, {"v_I", "v_O"}},
        {{"f_I"}, {"v_I"}, {"v_I", "v_P", "v_O", "v_D"}, {"v_K"}},
        {{"f_P"}, {"v_D"}, {"v_D"}, {"v_K", "v_I", "v_P", "v_O"}},
        {{"f_O"}, {"v_P"}, {"v_P", "v_D"}, {"v_K", "v_I", "v_O"}},
        {{"f_D"}, {"v_O"}, {"v_P", "v_O", "v_D"}, {"v_K", "v_I"}},
        {{"f_P", "f_D", "f_O"}, {"v_D", "v_O", "v_P"}, {"v_P", "v_O", "v_D"}, {"v_K", "v_I"}},
    };
}

std::vector<EffectRow> bathtub_scm_rows() {
    return {
        {{}, {"v_K"}, {"v_K", "v_P", "v_O", "v_D"}, {"v_I"}},
        {{}, {"v_I"}, {"v_I", "v_P", "v_O", "v_D"}, {"v_K"}},
        {{}, {"v_P"}, {"v_P", "v_O", "v_D"}, {"v_K", "v_I"}},
        {{}, {"v_O"}, {"v_P", "v_O", "v_D"}, {"v_K", "v_I"}},
        {{}, {"v_D"}, {"v_P", "v_O", "v_D"}, {"v_K", "v_I"}},
    };
}

}  // namespace causalorder::testing
