#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "causalorder/causal_ordering.hpp"
#include "causalorder/constraint_system.hpp"

namespace causalorder {

struct SoftInterventionSpec {
    Id target;
    Form new_form = Form::opaque;
    std::map<Id, double> coefficients;
    double new_constant = 0.0;
};

struct PerfectTarget {
    Id constraint;
    Id variable;
    double value = 0.0;
};

struct PerfectInterventionSpec {
    std::vector<PerfectTarget> pairs;

    std::vector<Id> constraints() const;
    std::vector<Id> variables() const;
};

using InterventionSpec = std::variant<SoftInterventionSpec, PerfectInterventionSpec>;

struct EffectPrediction {
    VertexSet generic;
    VertexSet none;

    bool operator==(const EffectPrediction&) const = default;
};

SystemOfConstraints soft_intervene(const SystemOfConstraints& system, const SoftInterventionSpec& spec);

// Pins each targeted constraint to x_v - value = 0 (real domain) or
// log x_v - log value = 0 (positive-real domain, value > 0).
SystemOfConstraints perfect_intervene(const SystemOfConstraints& system, const PerfectInterventionSpec& spec);

SystemOfConstraints apply_intervention(const SystemOfConstraints& system, const InterventionSpec& spec);

BipartiteGraph intervene_graph(const BipartiteGraph& graph, const std::vector<Id>& S_F, const std::vector<Id>& S_V);

// S_F u S_V must be exactly one cluster of dcg; pairs (S_F[i], S_V[i]) become
// clusters and edges into the old cluster are dropped. `exogenous` is used
// only to reject exogenous targets.
DirectedClusterGraph do_on_cluster_graph(const DirectedClusterGraph& dcg, const std::vector<Id>& S_F,
                                         const std::vector<Id>& S_V, const VertexSet& exogenous = {});

bool check_commutation(const BipartiteGraph& graph, const std::vector<Id>& S_F, const std::vector<Id>& S_V);

// Both partition the endogenous variables outside the incomplete part.
EffectPrediction predict_soft_effects(const DirectedClusterGraph& dcg, const BipartiteGraph& graph, const Id& f);
EffectPrediction predict_soft_effects(const BipartiteGraph& graph, const Id& f);

// S_F u S_V must be a union of clusters of order_cd(graph) outside the incomplete part.
EffectPrediction predict_perfect_effects(const BipartiteGraph& graph, const std::vector<Id>& S_F,
                                         const std::vector<Id>& S_V);

// {"soft": {"target", "new_form", "coefficients", "new_constant"}} or
// {"perfect": [{"constraint", "variable", "value"}, ...]}.
InterventionSpec parse_intervention_json(const std::string& text);
std::string intervention_to_json(const InterventionSpec& spec);

}  // namespace causalorder
