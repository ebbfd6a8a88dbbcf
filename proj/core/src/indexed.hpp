#pragma once

#include <map>
#include <string>
#include <vector>

#include "causalorder/constraint_system.hpp"

namespace causalorder::detail {

// Dense index view of a bipartite graph; ids and adjacency lists sorted.
struct IndexedBipartite {
    std::vector<Id> vars;
    std::vector<Id> cons;
    std::map<Id, int> var_index;
    std::map<Id, int> con_index;
    std::vector<std::vector<int>> var_adj;
    std::vector<std::vector<int>> con_adj;

    explicit IndexedBipartite(const BipartiteGraph& g) {
        for (const auto& v : g.V) {
            var_index[v] = static_cast<int>(vars.size());
            vars.push_back(v);
        }
        for (const auto& f : g.F) {
            con_index[f] = static_cast<int>(cons.size());
            cons.push_back(f);
        }
        var_adj.resize(vars.size());
        con_adj.resize(cons.size());
        for (const auto& [v, f] : g.E) {
            int i = var_index.at(v);
            int j = con_index.at(f);
            var_adj[i].push_back(j);
            con_adj[j].push_back(i);
        }
    }
};

// Tarjan's algorithm; components are returned in reverse topological order.
std::vector<std::vector<int>> strongly_connected_components(const std::vector<std::vector<int>>& adj);

}  // namespace causalorder::detail
