#include "causalorder/graph_io.hpp"

#include <sstream>

#include <json.hpp>

#include "causalorder/errors.hpp"

namespace causalorder {

using nlohmann::json;

namespace {

json parse_or_throw(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

std::string quote(const Id& id) {
    std::string out = "\"";
    for (char ch : id) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::string bipartite_to_json(const BipartiteGraph& graph) {
    json j;
    j["variables"] = graph.V;
    j["constraints"] = graph.F;
    j["exogenous"] = graph.W;
    j["edges"] = json::array();
    for (const auto& [v, f] : graph.E) j["edges"].push_back({v, f});
    return j.dump(2) + "\n";
}

BipartiteGraph bipartite_from_json(const std::string& text) {
    json j = parse_or_throw(text, "bipartite graph");
    BipartiteGraph g;
    try {
        g.V = j.at("variables").get<VertexSet>();
        g.F = j.at("constraints").get<VertexSet>();
        if (j.contains("exogenous")) g.W = j.at("exogenous").get<VertexSet>();
        for (const auto& e : j.at("edges")) g.E.emplace(e.at(0).get<Id>(), e.at(1).get<Id>());
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed bipartite graph: ") + e.what());
    }
    g.validate();
    return g;
}

std::string bipartite_to_dot(const BipartiteGraph& graph) {
    std::ostringstream out;
    out << "graph bipartite {\n";
    for (const auto& v : graph.V)
        out << "  " << quote(v) << (graph.W.count(v) ? " [shape=ellipse, style=dashed];\n" : " [shape=ellipse];\n");
    for (const auto& f : graph.F) out << "  " << quote(f) << " [shape=box];\n";
    for (const auto& [v, f] : graph.E) out << "  " << quote(v) << " -- " << quote(f) << ";\n";
    out << "}\n";
    return out.str();
}

std::string cluster_graph_to_json(const DirectedClusterGraph& dcg) {
    json j;
    j["clusters"] = dcg.clusters();
    j["edges"] = json::array();
    for (const auto& [v, i] : dcg.edges()) j["edges"].push_back({v, i});
    return j.dump(2) + "\n";
}

DirectedClusterGraph cluster_graph_from_json(const std::string& text) {
    json j = parse_or_throw(text, "cluster graph");
    std::vector<VertexSet> clusters;
    std::set<std::pair<Id, Id>> edges;
    try {
        clusters = j.at("clusters").get<std::vector<VertexSet>>();
        for (const auto& e : j.at("edges")) {
            auto i = e.at(1).get<std::size_t>();
            if (i >= clusters.size() || clusters[i].empty())
                throw ParseError("edge targets unknown cluster index " + std::to_string(i));
            edges.emplace(e.at(0).get<Id>(), *clusters[i].begin());
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed cluster graph: ") + e.what());
    }
    return DirectedClusterGraph(std::move(clusters), edges);
}

std::string cluster_graph_to_dot(const DirectedClusterGraph& dcg, const VertexSet& constraints,
                                 const VertexSet& exogenous) {
    std::ostringstream out;
    out << "digraph causal_ordering {\n  compound=true;\n";
    for (std::size_t i = 0; i < dcg.clusters().size(); ++i) {
        out << "  subgraph cluster_" << i << " {\n";
        for (const auto& x : dcg.clusters()[i]) {
            out << "    " << quote(x);
            if (constraints.count(x))
                out << " [shape=box]";
            else if (exogenous.count(x))
                out << " [shape=ellipse, style=dashed]";
            else
                out << " [shape=ellipse]";
            out << ";\n";
        }
        out << "  }\n";
    }
    // Edges land on the first member and are clipped to the cluster box.
    for (const auto& [v, i] : dcg.edges())
        out << "  " << quote(v) << " -> " << quote(*dcg.clusters()[i].begin()) << " [lhead=cluster_" << i << "];\n";
    out << "}\n";
    return out.str();
}

std::string mixed_graph_to_json(const DirectedMixedGraph& g) {
    json j;
    j["vertices"] = g.vertices;
    j["directed"] = json::array();
    for (const auto& [a, b] : g.directed) j["directed"].push_back({a, b});
    j["bidirected"] = json::array();
    for (const auto& [a, b] : g.bidirected) j["bidirected"].push_back({a, b});
    return j.dump(2) + "\n";
}

DirectedMixedGraph mixed_graph_from_json(const std::string& text) {
    json j = parse_or_throw(text, "graph");
    DirectedMixedGraph g;
    try {
        g.vertices = j.at("vertices").get<VertexSet>();
        if (j.contains("directed"))
            for (const auto& e : j.at("directed")) g.directed.emplace(e.at(0).get<Id>(), e.at(1).get<Id>());
        if (j.contains("bidirected"))
            for (const auto& e : j.at("bidirected")) {
                auto a = e.at(0).get<Id>(), b = e.at(1).get<Id>();
                g.bidirected.emplace(std::min(a, b), std::max(a, b));
            }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed graph: ") + e.what());
    }
    g.validate();
    return g;
}

std::string mixed_graph_to_dot(const DirectedMixedGraph& g, const VertexSet& exogenous) {
    std::ostringstream out;
    out << "digraph mixed {\n";
    for (const auto& v : g.vertices) out << "  " << quote(v) << (exogenous.count(v) ? " [style=dashed];\n" : ";\n");
    for (const auto& [a, b] : g.directed) out << "  " << quote(a) << " -> " << quote(b) << ";\n";
    for (const auto& [a, b] : g.bidirected)
        out << "  " << quote(a) << " -> " << quote(b) << " [dir=both, style=dashed];\n";
    out << "}\n";
    return out.str();
}

}  // namespace causalorder
