#include "causalorder/constraint_system.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "causalorder/errors.hpp"

namespace causalorder {

using nlohmann::json;

namespace {

Domain parse_domain(const std::string& s) {
    if (s == "real") return Domain::real;
    if (s == "positive-real") return Domain::positive_real;
    throw ParseError("unknown domain '" + s + "'");
}

Form parse_form(const std::string& s) {
    if (s == "opaque") return Form::opaque;
    if (s == "linear") return Form::linear;
    if (s == "loglinear") return Form::loglinear;
    throw ParseError("unknown constraint form '" + s + "'");
}

DistributionKind parse_kind(const std::string& s) {
    if (s == "normal") return DistributionKind::normal;
    if (s == "lognormal") return DistributionKind::lognormal;
    if (s == "uniform-positive") return DistributionKind::uniform_positive;
    throw ParseError("unknown distribution kind '" + s + "'");
}

template <typename T>
T field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
    try {
        return it->get<T>();
    } catch (const json::exception&) {
        throw ParseError(where + ": field '" + key + "' has the wrong type");
    }
}

template <typename T>
T field_or(const json& obj, const char* key, T fallback, const std::string& where) {
    if (!obj.contains(key)) return fallback;
    return field<T>(obj, key, where);
}

ExogenousDistribution parse_distribution(const json& j, const std::string& where) {
    if (!j.is_object()) throw ParseError(where + ": distribution must be an object");
    ExogenousDistribution d;
    d.kind = parse_kind(field<std::string>(j, "kind", where));
    if (d.kind == DistributionKind::uniform_positive) {
        d.low = field<double>(j, "low", where);
        d.high = field<double>(j, "high", where);
    } else {
        d.mean = field_or<double>(j, "mean", 0.0, where);
        d.sigma = field<double>(j, "sigma", where);
    }
    return d;
}

json distribution_json(const ExogenousDistribution& d) {
    json j;
    j["kind"] = to_string(d.kind);
    if (d.kind == DistributionKind::uniform_positive) {
        j["low"] = d.low;
        j["high"] = d.high;
    } else {
        j["mean"] = d.mean;
        j["sigma"] = d.sigma;
    }
    return j;
}

}  // namespace

const char* to_string(Domain d) { return d == Domain::real ? "real" : "positive-real"; }

const char* to_string(Form f) {
    switch (f) {
        case Form::opaque: return "opaque";
        case Form::linear: return "linear";
        case Form::loglinear: return "loglinear";
    }
    return "opaque";
}

const char* to_string(DistributionKind k) {
    switch (k) {
        case DistributionKind::normal: return "normal";
        case DistributionKind::lognormal: return "lognormal";
        case DistributionKind::uniform_positive: return "uniform-positive";
    }
    return "normal";
}

const VariableDecl& SystemOfConstraints::variable(const Id& id) const {
    for (const auto& v : variables)
        if (v.id == id) return v;
    throw InvalidArgument("unknown variable '" + id + "'");
}

const ConstraintDecl& SystemOfConstraints::constraint(const Id& id) const {
    for (const auto& c : constraints)
        if (c.id == id) return c;
    throw InvalidArgument("unknown constraint '" + id + "'");
}

bool SystemOfConstraints::has_variable(const Id& id) const {
    for (const auto& v : variables)
        if (v.id == id) return true;
    return false;
}

bool SystemOfConstraints::has_constraint(const Id& id) const {
    for (const auto& c : constraints)
        if (c.id == id) return true;
    return false;
}

VertexSet SystemOfConstraints::exogenous_ids() const {
    VertexSet out;
    for (const auto& v : variables)
        if (v.exogenous) out.insert(v.id);
    return out;
}

VertexSet SystemOfConstraints::endogenous_ids() const {
    VertexSet out;
    for (const auto& v : variables)
        if (!v.exogenous) out.insert(v.id);
    return out;
}

VertexSet BipartiteGraph::vertices() const {
    VertexSet out = V;
    out.insert(F.begin(), F.end());
    return out;
}

VertexSet BipartiteGraph::endogenous() const {
    VertexSet out;
    for (const auto& v : V)
        if (!W.count(v)) out.insert(v);
    return out;
}

VertexSet BipartiteGraph::adj(const Id& x) const {
    VertexSet out;
    for (const auto& [v, f] : E) {
        if (v == x) out.insert(f);
        if (f == x) out.insert(v);
    }
    return out;
}

VertexSet BipartiteGraph::adj(const VertexSet& xs) const {
    VertexSet out;
    for (const auto& [v, f] : E) {
        if (xs.count(v)) out.insert(f);
        if (xs.count(f)) out.insert(v);
    }
    return out;
}

void BipartiteGraph::validate() const {
    for (const auto& v : V)
        if (F.count(v)) throw ValidationError("vertex '" + v + "' is both a variable and a constraint");
    for (const auto& w : W)
        if (!V.count(w)) throw ValidationError("exogenous vertex '" + w + "' is not a variable vertex");
    for (const auto& [v, f] : E) {
        if (!V.count(v)) throw ValidationError("edge endpoint '" + v + "' is not a variable vertex");
        if (!F.count(f)) throw ValidationError("edge endpoint '" + f + "' is not a constraint vertex");
    }
}

void validate(const SystemOfConstraints& system) {
    if (system.variables.empty()) throw ValidationError("system declares no variables");

    std::map<Id, const VariableDecl*> vars;
    for (const auto& v : system.variables) {
        if (v.id.empty()) throw ValidationError("variable with empty id");
        if (!vars.emplace(v.id, &v).second) throw ValidationError("duplicate id '" + v.id + "'");
        if (!v.distribution) continue;
        if (!v.exogenous) throw ValidationError("distribution on endogenous variable '" + v.id + "'");
        const auto& d = *v.distribution;
        if (d.kind == DistributionKind::uniform_positive) {
            if (!(d.low >= 0.0 && d.low < d.high) || !std::isfinite(d.high))
                throw ValidationError("variable '" + v.id + "' needs 0 <= low < high");
        } else {
            if (!(d.sigma > 0.0) || !std::isfinite(d.sigma) || !std::isfinite(d.mean))
                throw ValidationError("variable '" + v.id + "' needs sigma > 0");
        }
        if (d.kind != DistributionKind::normal && v.domain != Domain::positive_real)
            throw ValidationError(std::string(to_string(d.kind)) + " distribution on variable '" + v.id +
                                  "' requires the positive-real domain");
    }

    std::unordered_set<Id> cons;
    for (const auto& c : system.constraints) {
        if (c.id.empty()) throw ValidationError("constraint with empty id");
        if (vars.count(c.id)) throw ValidationError("duplicate id '" + c.id + "'");
        if (!cons.insert(c.id).second) throw ValidationError("duplicate id '" + c.id + "'");
        if (c.variables.empty()) throw ValidationError("constraint '" + c.id + "' references no variables");
        for (const auto& v : c.variables)
            if (!vars.count(v))
                throw ValidationError("unknown variable '" + v + "' in constraint '" + c.id + "'");
        if (c.form == Form::opaque) {
            if (!c.coefficients.empty())
                throw ValidationError("opaque constraint '" + c.id + "' carries coefficients");
            continue;
        }
        if (!std::isfinite(c.constant)) throw ValidationError("constraint '" + c.id + "' has a non-finite constant");
        for (const auto& [v, a] : c.coefficients) {
            if (!c.variables.count(v))
                throw ValidationError("coefficient for '" + v + "' outside the variables of constraint '" + c.id + "'");
            if (!std::isfinite(a))
                throw ValidationError("constraint '" + c.id + "' has a non-finite coefficient");
        }
        if (c.form == Form::loglinear) {
            for (const auto& v : c.variables)
                if (vars.at(v)->domain != Domain::positive_real)
                    throw ValidationError("loglinear constraint '" + c.id + "' references variable '" + v +
                                          "' outside the positive-real domain");
        }
    }
}

std::vector<std::string> warnings(const SystemOfConstraints& system) {
    VertexSet used;
    for (const auto& c : system.constraints) used.insert(c.variables.begin(), c.variables.end());
    std::vector<std::string> out;
    for (const auto& v : system.variables)
        if (!used.count(v.id)) out.push_back("variable '" + v.id + "' is incident to no constraint");
    return out;
}

SystemOfConstraints parse_system(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("top level must be an object");
    if (!root.contains("variables") || !root["variables"].is_array())
        throw ParseError("missing array 'variables'");
    if (root.contains("constraints") && !root["constraints"].is_array())
        throw ParseError("'constraints' must be an array");

    SystemOfConstraints sys;
    std::size_t i = 0;
    for (const auto& jv : root["variables"]) {
        std::string where = "variables[" + std::to_string(i++) + "]";
        if (!jv.is_object()) throw ParseError(where + ": must be an object");
        VariableDecl v;
        v.id = field<std::string>(jv, "id", where);
        v.exogenous = field_or<bool>(jv, "exogenous", false, where);
        v.domain = parse_domain(field_or<std::string>(jv, "domain", "real", where));
        if (jv.contains("distribution") && !jv["distribution"].is_null())
            v.distribution = parse_distribution(jv["distribution"], where);
        sys.variables.push_back(std::move(v));
    }
    i = 0;
    if (root.contains("constraints")) {
        for (const auto& jc : root["constraints"]) {
            std::string where = "constraints[" + std::to_string(i++) + "]";
            if (!jc.is_object()) throw ParseError(where + ": must be an object");
            ConstraintDecl c;
            c.id = field<std::string>(jc, "id", where);
            auto vs = field<std::vector<std::string>>(jc, "variables", where);
            c.variables = VertexSet(vs.begin(), vs.end());
            c.form = parse_form(field_or<std::string>(jc, "form", "opaque", where));
            if (jc.contains("coefficients")) c.coefficients = field<std::map<Id, double>>(jc, "coefficients", where);
            c.constant = field_or<double>(jc, "constant", 0.0, where);
            sys.constraints.push_back(std::move(c));
        }
    }
    validate(sys);
    return sys;
}

SystemOfConstraints load_system(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

std::string serialize(const SystemOfConstraints& system) {
    json root;
    root["variables"] = json::array();
    for (const auto& v : system.variables) {
        json jv;
        jv["id"] = v.id;
        jv["exogenous"] = v.exogenous;
        jv["domain"] = to_string(v.domain);
        if (v.distribution) jv["distribution"] = distribution_json(*v.distribution);
        root["variables"].push_back(jv);
    }
    root["constraints"] = json::array();
    for (const auto& c : system.constraints) {
        json jc;
        jc["id"] = c.id;
        jc["variables"] = std::vector<std::string>(c.variables.begin(), c.variables.end());
        jc["form"] = to_string(c.form);
        if (c.form != Form::opaque) {
            jc["coefficients"] = json::object();
            for (const auto& [k, a] : c.coefficients) jc["coefficients"][k] = a;
            jc["constant"] = c.constant;
        }
        root["constraints"].push_back(jc);
    }
    return root.dump(2) + "\n";
}

BipartiteGraph bipartite_of(const SystemOfConstraints& system) {
    BipartiteGraph g;
    for (const auto& v : system.variables) {
        g.V.insert(v.id);
        if (v.exogenous) g.W.insert(v.id);
    }
    for (const auto& c : system.constraints) {
        g.F.insert(c.id);
        for (const auto& v : c.variables) g.E.emplace(v, c.id);
    }
    return g;
}

BipartiteGraph induced_subgraph(const BipartiteGraph& graph, const VertexSet& keep) {
    BipartiteGraph out;
    for (const auto& x : keep) {
        if (graph.V.count(x)) {
            out.V.insert(x);
            if (graph.W.count(x)) out.W.insert(x);
        } else if (graph.F.count(x)) {
            out.F.insert(x);
        } else {
            throw InvalidArgument("unknown vertex '" + x + "'");
        }
    }
    for (const auto& e : graph.E)
        if (keep.count(e.first) && keep.count(e.second)) out.E.insert(e);
    return out;
}

BipartiteGraph endogenous_subgraph(const BipartiteGraph& graph) {
    VertexSet keep = graph.endogenous();
    keep.insert(graph.F.begin(), graph.F.end());
    return induced_subgraph(graph, keep);
}

}  // namespace causalorder
