#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "causalorder/causal_ordering.hpp"
#include "causalorder/constraint_system.hpp"
#include "causalorder/interventions.hpp"

namespace causalorder {

inline constexpr double kConditionThreshold = 1e-9;
inline constexpr double kResidualTolerance = 1e-8;
inline constexpr double kNonEffectTolerance = 1e-8;
inline constexpr std::size_t kMaxMarkovVariables = 12;
inline constexpr std::size_t kMaxConditioningSize = 3;

enum class Region { incomplete, complete, overcomplete };
const char* to_string(Region r);

struct ClusterSolveReport {
    VertexSet cluster;
    Region region = Region::complete;
    bool solvable = false;
    // Unique solvability; always false for incomplete clusters.
    bool unique = false;
    // Smallest over largest singular value of the cluster submatrix.
    double condition = 0.0;
};

std::vector<ClusterSolveReport> check_solvability(const SystemOfConstraints& system, const DirectedClusterGraph& dcg);
std::vector<ClusterSolveReport> check_solvability(const SystemOfConstraints& system);

struct Solution {
    // Every variable, exogenous ones included.
    std::map<Id, double> values;
    // Variables from incomplete clusters (minimum-norm pseudo-solution).
    VertexSet pseudo;
};

Solution solve(const SystemOfConstraints& system, const std::map<Id, double>& exo_values);

// Largest |residual| over all linear/loglinear constraints, each in its own space.
double max_residual(const SystemOfConstraints& system, const std::map<Id, double>& values);

struct SampleBatch {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::map<Id, std::vector<double>> columns;
    VertexSet pseudo;

    bool operator==(const SampleBatch&) const = default;
};

SampleBatch sample(const SystemOfConstraints& system, std::size_t n, std::uint64_t seed);

// Columns of `vars` replaced by their logarithms.
SampleBatch log_transformed(const SampleBatch& batch, const VertexSet& vars);

// Positive-real variables touched by a loglinear constraint and no linear one.
VertexSet log_scale_variables(const SystemOfConstraints& system);

double partial_correlation(const SampleBatch& batch, const Id& x, const Id& y, const VertexSet& z);

struct CIQueryResult {
    Id x;
    Id y;
    VertexSet z;
    double partial_corr = 0.0;
    double z_stat = 0.0;
    double p_value = 1.0;
    bool predicted_independent = false;
    bool rejected = false;
    // x or y is a deterministic function of z; independence holds trivially.
    bool degenerate = false;
    std::optional<bool> sigma_separated;
};

// Fisher z test of x _||_ y | z at level alpha.
CIQueryResult fisher_z_test(const SampleBatch& batch, const Id& x, const Id& y, const VertexSet& z, double alpha);

struct MarkovReport {
    double alpha = 0.0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::vector<CIQueryResult> queries;

    std::size_t separated() const;
    std::size_t separated_rejected() const;
    std::size_t connected() const;
    std::size_t connected_rejected() const;
    bool passed() const { return separated_rejected() == 0; }
};

MarkovReport verify_markov(const SystemOfConstraints& system, double alpha, std::size_t n, std::uint64_t seed);

double ks_statistic(std::vector<double> a, std::vector<double> b);

struct EffectCheck {
    Id variable;
    bool predicted_effect = false;
    double max_abs_diff = 0.0;
    double ks_statistic = 0.0;
    bool passed = true;
};

struct InterventionReport {
    std::string spec;
    std::vector<EffectCheck> checks;
    bool passed() const;
};

InterventionReport verify_intervention_effects(const SystemOfConstraints& system, const InterventionSpec& spec,
                                               std::size_t n, std::uint64_t seed);

std::string report_json(const std::vector<ClusterSolveReport>& solvability, const MarkovReport* markov,
                        const InterventionReport* interventions);
std::string report_table(const std::vector<ClusterSolveReport>& solvability, const MarkovReport* markov,
                         const InterventionReport* interventions);

}  // namespace causalorder
