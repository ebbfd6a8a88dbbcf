#include "causalorder/interventions.hpp"

#include <cmath>

#include <json.hpp>

#include "causalorder/errors.hpp"

namespace causalorder {

using nlohmann::json;

std::vector<Id> PerfectInterventionSpec::constraints() const {
    std::vector<Id> out;
    for (const auto& p : pairs) out.push_back(p.constraint);
    return out;
}

std::vector<Id> PerfectInterventionSpec::variables() const {
    std::vector<Id> out;
    for (const auto& p : pairs) out.push_back(p.variable);
    return out;
}

SystemOfConstraints soft_intervene(const SystemOfConstraints& system, const SoftInterventionSpec& spec) {
    SystemOfConstraints out = system;
    ConstraintDecl* target = nullptr;
    for (auto& c : out.constraints)
        if (c.id == spec.target) target = &c;
    if (!target) throw InvalidArgument("unknown constraint '" + spec.target + "'");
    for (const auto& [v, a] : spec.coefficients)
        if (!target->variables.count(v))
            throw InvalidArgument("soft intervention on '" + spec.target + "' would change its variable set: '" + v +
                                  "' is not among them");
    if (spec.new_form == Form::opaque && !spec.coefficients.empty())
        throw InvalidArgument("opaque replacement for '" + spec.target + "' cannot carry coefficients");
    target->form = spec.new_form;
    target->coefficients = spec.coefficients;
    target->constant = spec.new_form == Form::opaque ? 0.0 : spec.new_constant;
    try {
        validate(out);
    } catch (const ValidationError& e) {
        throw InvalidArgument(std::string("soft intervention yields an invalid system: ") + e.what());
    }
    return out;
}

SystemOfConstraints perfect_intervene(const SystemOfConstraints& system, const PerfectInterventionSpec& spec) {
    SystemOfConstraints out = system;
    VertexSet seen_f, seen_v;
    for (const auto& p : spec.pairs) {
        if (!system.has_constraint(p.constraint)) throw InvalidArgument("unknown constraint '" + p.constraint + "'");
        if (!system.has_variable(p.variable)) throw InvalidArgument("unknown variable '" + p.variable + "'");
        const auto& var = system.variable(p.variable);
        if (var.exogenous) throw InvalidArgument("cannot pin exogenous variable '" + p.variable + "'");
        if (!seen_f.insert(p.constraint).second) throw InvalidArgument("constraint '" + p.constraint + "' targeted twice");
        if (!seen_v.insert(p.variable).second) throw InvalidArgument("variable '" + p.variable + "' targeted twice");
        if (!std::isfinite(p.value)) throw InvalidArgument("non-finite intervention value");
        for (auto& c : out.constraints) {
            if (c.id != p.constraint) continue;
            c.variables = {p.variable};
            c.coefficients = {{p.variable, 1.0}};
            if (var.domain == Domain::positive_real) {
                if (!(p.value > 0.0))
                    throw InvalidArgument("value for positive-real variable '" + p.variable + "' must be > 0");
                c.form = Form::loglinear;
                c.constant = -std::log(p.value);
            } else {
                c.form = Form::linear;
                c.constant = -p.value;
            }
        }
    }
    validate(out);
    return out;
}

SystemOfConstraints apply_intervention(const SystemOfConstraints& system, const InterventionSpec& spec) {
    if (const auto* soft = std::get_if<SoftInterventionSpec>(&spec)) return soft_intervene(system, *soft);
    return perfect_intervene(system, std::get<PerfectInterventionSpec>(spec));
}

namespace {

void check_targets(const BipartiteGraph& graph, const std::vector<Id>& S_F, const std::vector<Id>& S_V) {
    if (S_F.size() != S_V.size()) throw InvalidArgument("S_F and S_V differ in length");
    VertexSet fs, vs;
    for (const auto& f : S_F) {
        if (!graph.is_constraint(f)) throw InvalidArgument("unknown constraint '" + f + "'");
        if (!fs.insert(f).second) throw InvalidArgument("constraint '" + f + "' targeted twice");
    }
    for (const auto& v : S_V) {
        if (!graph.is_variable(v)) throw InvalidArgument("unknown variable '" + v + "'");
        if (graph.W.count(v)) throw InvalidArgument("cannot target exogenous variable '" + v + "'");
        if (!vs.insert(v).second) throw InvalidArgument("variable '" + v + "' targeted twice");
    }
}

VertexSet outside_incomplete(const BipartiteGraph& graph, const CoarseDecomposition& cd) {
    VertexSet out;
    for (const auto& v : graph.endogenous())
        if (!cd.T_I.count(v)) out.insert(v);
    return out;
}

EffectPrediction split(const VertexSet& region, const VertexSet& reached) {
    EffectPrediction p;
    for (const auto& v : region) (reached.count(v) ? p.generic : p.none).insert(v);
    return p;
}

}  // namespace

BipartiteGraph intervene_graph(const BipartiteGraph& graph, const std::vector<Id>& S_F, const std::vector<Id>& S_V) {
    check_targets(graph, S_F, S_V);
    BipartiteGraph out = graph;
    VertexSet fs(S_F.begin(), S_F.end());
    std::erase_if(out.E, [&](const auto& e) { return fs.count(e.second) > 0; });
    for (std::size_t i = 0; i < S_F.size(); ++i) out.E.emplace(S_V[i], S_F[i]);
    return out;
}

DirectedClusterGraph do_on_cluster_graph(const DirectedClusterGraph& dcg, const std::vector<Id>& S_F,
                                         const std::vector<Id>& S_V, const VertexSet& exogenous) {
    if (S_F.size() != S_V.size()) throw InvalidArgument("S_F and S_V differ in length");
    if (S_F.empty()) return dcg;
    VertexSet target(S_F.begin(), S_F.end());
    target.insert(S_V.begin(), S_V.end());
    if (target.size() != S_F.size() + S_V.size()) throw InvalidArgument("repeated intervention target");
    for (const auto& x : target) {
        if (!dcg.contains(x)) throw InvalidArgument("unknown vertex '" + x + "'");
        if (exogenous.count(x)) throw DomainError("intervention target overlaps the exogenous vertices");
    }
    std::size_t c = dcg.cluster_index(*target.begin());
    if (dcg.clusters()[c] != target) throw DomainError("target " + format_set(target) + " is not a cluster");

    std::vector<VertexSet> clusters;
    for (std::size_t i = 0; i < dcg.clusters().size(); ++i)
        if (i != c) clusters.push_back(dcg.clusters()[i]);
    for (std::size_t i = 0; i < S_F.size(); ++i) clusters.push_back({S_F[i], S_V[i]});
    std::set<std::pair<Id, Id>> edges;
    for (const auto& [x, j] : dcg.edges())
        if (j != c) edges.emplace(x, *dcg.clusters()[j].begin());
    return DirectedClusterGraph(std::move(clusters), edges);
}

bool check_commutation(const BipartiteGraph& graph, const std::vector<Id>& S_F, const std::vector<Id>& S_V) {
    check_targets(graph, S_F, S_V);
    DirectedClusterGraph co = order_cd(graph);
    DirectedClusterGraph rhs = do_on_cluster_graph(co, S_F, S_V, graph.W);
    DirectedClusterGraph lhs = order_cd(intervene_graph(graph, S_F, S_V));
    return lhs == rhs;
}

EffectPrediction predict_soft_effects(const DirectedClusterGraph& dcg, const BipartiteGraph& graph, const Id& f) {
    if (!graph.is_constraint(f)) throw InvalidArgument("unknown constraint '" + f + "'");
    CoarseDecomposition cd = coarse_decomposition(endogenous_subgraph(graph));
    if (cd.T_I.count(f)) throw DomainError("constraint '" + f + "' lies in the incomplete part");
    return split(outside_incomplete(graph, cd), reachable_from(dcg, f));
}

EffectPrediction predict_soft_effects(const BipartiteGraph& graph, const Id& f) {
    return predict_soft_effects(order_cd(graph), graph, f);
}

EffectPrediction predict_perfect_effects(const BipartiteGraph& graph, const std::vector<Id>& S_F,
                                         const std::vector<Id>& S_V) {
    check_targets(graph, S_F, S_V);
    if (S_F.empty()) throw InvalidArgument("empty perfect intervention");
    DirectedClusterGraph co = order_cd(graph);
    CoarseDecomposition cd = coarse_decomposition(endogenous_subgraph(graph));
    VertexSet target(S_F.begin(), S_F.end());
    target.insert(S_V.begin(), S_V.end());
    for (const auto& x : target) {
        if (cd.T_I.count(x)) throw DomainError("target '" + x + "' lies in the incomplete part");
        for (const auto& y : co.cluster_of(x))
            if (!target.count(y))
                throw DomainError("target " + format_set(target) + " is not a union of causal ordering clusters");
    }
    VertexSet reached;
    for (const auto& v : S_V) {
        auto r = reachable_from(co, v);
        reached.insert(r.begin(), r.end());
    }
    return split(outside_incomplete(graph, cd), reached);
}

namespace {

Form form_from(const std::string& s) {
    if (s == "opaque") return Form::opaque;
    if (s == "linear") return Form::linear;
    if (s == "loglinear") return Form::loglinear;
    throw ParseError("unknown form '" + s + "'");
}

}  // namespace

InterventionSpec parse_intervention_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed intervention JSON: ") + e.what());
    }
    try {
        if (root.contains("soft")) {
            const auto& s = root.at("soft");
            SoftInterventionSpec spec;
            spec.target = s.at("target").get<std::string>();
            spec.new_form = form_from(s.value("new_form", std::string("linear")));
            if (s.contains("coefficients")) spec.coefficients = s.at("coefficients").get<std::map<Id, double>>();
            spec.new_constant = s.value("new_constant", 0.0);
            return spec;
        }
        if (root.contains("perfect")) {
            PerfectInterventionSpec spec;
            for (const auto& p : root.at("perfect"))
                spec.pairs.push_back({p.at("constraint").get<std::string>(), p.at("variable").get<std::string>(),
                                      p.at("value").get<double>()});
            return spec;
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed intervention spec: ") + e.what());
    }
    throw ParseError("intervention spec needs a 'soft' or 'perfect' member");
}

std::string intervention_to_json(const InterventionSpec& spec) {
    json root;
    if (const auto* soft = std::get_if<SoftInterventionSpec>(&spec)) {
        root["soft"] = {{"target", soft->target},
                        {"new_form", to_string(soft->new_form)},
                        {"coefficients", soft->coefficients},
                        {"new_constant", soft->new_constant}};
    } else {
        root["perfect"] = json::array();
        for (const auto& p : std::get<PerfectInterventionSpec>(spec).pairs)
            root["perfect"].push_back({{"constraint", p.constraint}, {"variable", p.variable}, {"value", p.value}});
    }
    return root.dump();
}

}  // namespace causalorder
