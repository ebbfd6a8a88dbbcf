#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "causalorder/types.hpp"

namespace causalorder {

enum class Domain { real, positive_real };
enum class Form { opaque, linear, loglinear };
enum class DistributionKind { normal, lognormal, uniform_positive };

// normal and lognormal use mean/sigma (lognormal on the log scale);
// uniform-positive uses low/high.
struct ExogenousDistribution {
    DistributionKind kind = DistributionKind::normal;
    double mean = 0.0;
    double sigma = 1.0;
    double low = 0.0;
    double high = 1.0;

    bool operator==(const ExogenousDistribution&) const = default;
};

struct VariableDecl {
    Id id;
    bool exogenous = false;
    Domain domain = Domain::real;
    std::optional<ExogenousDistribution> distribution;

    bool operator==(const VariableDecl&) const = default;
};

// linear:    sum coef_i * x_i + constant = 0
// loglinear: sum coef_i * log(x_i) + constant = 0
// `variables` is the structural set and is authoritative for the graph.
struct ConstraintDecl {
    Id id;
    VertexSet variables;
    Form form = Form::opaque;
    std::map<Id, double> coefficients;
    double constant = 0.0;

    bool operator==(const ConstraintDecl&) const = default;
};

struct SystemOfConstraints {
    std::vector<VariableDecl> variables;
    std::vector<ConstraintDecl> constraints;

    const VariableDecl& variable(const Id& id) const;
    const ConstraintDecl& constraint(const Id& id) const;
    bool has_variable(const Id& id) const;
    bool has_constraint(const Id& id) const;
    VertexSet exogenous_ids() const;
    VertexSet endogenous_ids() const;

    bool operator==(const SystemOfConstraints&) const = default;
};

// Edges are stored as (variable, constraint) pairs.
struct BipartiteGraph {
    VertexSet V;
    VertexSet F;
    VertexSet W;
    std::set<std::pair<Id, Id>> E;

    bool is_variable(const Id& x) const { return V.count(x) > 0; }
    bool is_constraint(const Id& x) const { return F.count(x) > 0; }
    bool contains(const Id& x) const { return is_variable(x) || is_constraint(x); }
    VertexSet vertices() const;
    VertexSet endogenous() const;
    VertexSet adj(const Id& x) const;
    VertexSet adj(const VertexSet& xs) const;

    // Throws ValidationError when an invariant does not hold.
    void validate() const;

    bool operator==(const BipartiteGraph&) const = default;
};

const char* to_string(Domain d);
const char* to_string(Form f);
const char* to_string(DistributionKind k);

// Throws ValidationError naming the first violated invariant.
void validate(const SystemOfConstraints& system);

// Non-fatal findings, currently variables incident to no constraint.
std::vector<std::string> warnings(const SystemOfConstraints& system);

SystemOfConstraints parse_system(const std::string& json_text);
SystemOfConstraints load_system(const std::filesystem::path& path);
std::string serialize(const SystemOfConstraints& system);

BipartiteGraph bipartite_of(const SystemOfConstraints& system);
BipartiteGraph induced_subgraph(const BipartiteGraph& graph, const VertexSet& keep);

// Subgraph induced by (V \ W) u F.
BipartiteGraph endogenous_subgraph(const BipartiteGraph& graph);

}  // namespace causalorder
