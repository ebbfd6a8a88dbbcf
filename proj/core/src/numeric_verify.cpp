#include "causalorder/numeric_verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <Eigen/Dense>
#include <json.hpp>

#include "causalorder/errors.hpp"
#include "causalorder/markov_graph.hpp"
#include "causalorder/random.hpp"
#include "parallel.hpp"

namespace causalorder {

using nlohmann::json;

const char* to_string(Region r) {
    switch (r) {
        case Region::incomplete: return "incomplete";
        case Region::complete: return "complete";
        case Region::overcomplete: return "overcomplete";
    }
    return "?";
}

namespace {

// Precomputed solve of one cluster: unknowns = pinv * (-c - B * parents),
// all in log space for loglinear clusters.
struct ClusterPlan {
    ClusterSolveReport report;
    Form form = Form::linear;
    std::vector<int> unknowns;
    std::vector<int> parents;
    Eigen::MatrixXd pinv;
    Eigen::MatrixXd B;
    Eigen::VectorXd c;
};

struct ConstraintRow {
    Id id;
    Form form = Form::linear;
    std::vector<std::pair<int, double>> terms;
    double constant = 0.0;
};

struct SolvePlan {
    std::vector<Id> ids;
    std::map<Id, int> index;
    std::vector<int> exogenous;
    std::vector<ClusterPlan> clusters;
    std::vector<ConstraintRow> rows;
    VertexSet pseudo;
};

double singular_ratio(const Eigen::VectorXd& s) {
    if (s.size() == 0) return 1.0;
    double hi = s.maxCoeff();
    if (!(hi > 0.0)) return 0.0;
    return s.minCoeff() / hi;
}

ClusterPlan plan_cluster(const SystemOfConstraints& system, const VertexSet& cluster, const std::map<Id, int>& index) {
    ClusterPlan plan;
    plan.report.cluster = cluster;
    std::vector<const ConstraintDecl*> cons;
    std::vector<Id> vars;
    for (const auto& x : cluster) {
        if (system.has_constraint(x)) {
            const auto& c = system.constraint(x);
            if (c.form == Form::opaque) throw DomainError("constraint '" + x + "' has no numeric form");
            cons.push_back(&c);
        } else {
            vars.push_back(x);
        }
    }
    if (!cons.empty()) {
        plan.form = cons.front()->form;
        for (const auto* c : cons)
            if (c->form != plan.form)
                throw DomainError("cluster " + format_set(cluster) + " mixes linear and loglinear constraints");
    }

    VertexSet parent_set;
    for (const auto* c : cons)
        for (const auto& v : c->variables)
            if (!cluster.count(v)) parent_set.insert(v);
    std::vector<Id> parents(parent_set.begin(), parent_set.end());

    const auto m = static_cast<Eigen::Index>(cons.size());
    const auto n = static_cast<Eigen::Index>(vars.size());
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(m, n);
    plan.B = Eigen::MatrixXd::Zero(m, static_cast<Eigen::Index>(parents.size()));
    plan.c = Eigen::VectorXd::Zero(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto* c = cons[static_cast<std::size_t>(i)];
        plan.c(i) = c->constant;
        for (const auto& [v, a] : c->coefficients) {
            auto vit = std::find(vars.begin(), vars.end(), v);
            if (vit != vars.end()) {
                A(i, vit - vars.begin()) = a;
            } else {
                auto pit = std::find(parents.begin(), parents.end(), v);
                plan.B(i, pit - parents.begin()) = a;
            }
        }
    }

    plan.report.region = m < n ? Region::incomplete : (m == n ? Region::complete : Region::overcomplete);
    plan.pinv = Eigen::MatrixXd::Zero(n, m);
    if (m > 0 && n > 0) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const Eigen::VectorXd& s = svd.singularValues();
        plan.report.condition = singular_ratio(s);
        double cutoff = kConditionThreshold * (s.size() ? s.maxCoeff() : 0.0);
        Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
        for (Eigen::Index k = 0; k < s.size(); ++k)
            if (s(k) > cutoff && s(k) > 0.0) inv(k) = 1.0 / s(k);
        plan.pinv = svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
    } else {
        plan.report.condition = 1.0;
    }
    plan.report.solvable = plan.report.condition > kConditionThreshold;
    plan.report.unique = plan.report.solvable && m >= n;

    for (const auto& v : vars) plan.unknowns.push_back(index.at(v));
    for (const auto& v : parents) plan.parents.push_back(index.at(v));
    return plan;
}

SolvePlan make_plan(const SystemOfConstraints& system, const DirectedClusterGraph& dcg) {
    SolvePlan plan;
    for (const auto& v : system.variables) {
        plan.index[v.id] = static_cast<int>(plan.ids.size());
        plan.ids.push_back(v.id);
    }
    BipartiteGraph bip = bipartite_of(system);
    if (dcg.vertices() != bip.vertices())
        throw InvalidArgument("cluster graph does not cover the vertices of the system");
    for (std::size_t i : dcg.topological_order()) {
        const VertexSet& cluster = dcg.clusters()[i];
        if (cluster.size() == 1 && bip.W.count(*cluster.begin())) {
            plan.exogenous.push_back(plan.index.at(*cluster.begin()));
            continue;
        }
        for (const auto& x : cluster)
            if (bip.W.count(x)) throw InvalidArgument("exogenous '" + x + "' shares a cluster");
        plan.clusters.push_back(plan_cluster(system, cluster, plan.index));
        if (plan.clusters.back().report.region == Region::incomplete)
            for (const auto& x : cluster)
                if (bip.is_variable(x)) plan.pseudo.insert(x);
    }
    for (const auto& c : system.constraints) {
        if (c.form == Form::opaque) continue;
        ConstraintRow row{c.id, c.form, {}, c.constant};
        for (const auto& [v, a] : c.coefficients) row.terms.emplace_back(plan.index.at(v), a);
        plan.rows.push_back(std::move(row));
    }
    return plan;
}

void require_solvable(const SolvePlan& plan) {
    for (const auto& c : plan.clusters)
        if (!c.report.solvable && c.report.region != Region::incomplete)
            throw DomainError("cluster " + format_set(c.report.cluster) + " is not solvable (condition " +
                              std::to_string(c.report.condition) + ")");
}

double log_input(const std::vector<Id>& ids, int k, double x) {
    if (!(x > 0.0))
        throw DomainError("nonpositive value " + std::to_string(x) + " of '" + ids[static_cast<std::size_t>(k)] +
                          "' fed to a loglinear constraint");
    return std::log(x);
}

// Fills every endogenous entry of `vals` from its exogenous entries.
void solve_row(const SolvePlan& plan, std::vector<double>& vals) {
    Eigen::VectorXd rhs, y;
    for (const auto& c : plan.clusters) {
        const bool logs = c.form == Form::loglinear;
        rhs = -c.c;
        for (std::size_t k = 0; k < c.parents.size(); ++k) {
            int p = c.parents[k];
            double t = logs ? log_input(plan.ids, p, vals[static_cast<std::size_t>(p)]) : vals[static_cast<std::size_t>(p)];
            if (t != 0.0) rhs -= c.B.col(static_cast<Eigen::Index>(k)) * t;
        }
        y = c.pinv * rhs;
        for (std::size_t k = 0; k < c.unknowns.size(); ++k) {
            double v = y(static_cast<Eigen::Index>(k));
            vals[static_cast<std::size_t>(c.unknowns[k])] = logs ? std::exp(v) : v;
        }
    }
}

// |residual| / max(1, largest term magnitude), worst over all constraints.
double row_residual(const SolvePlan& plan, const std::vector<double>& vals, Id* worst = nullptr) {
    double out = 0.0;
    for (const auto& r : plan.rows) {
        double sum = r.constant;
        double scale = std::max(1.0, std::abs(r.constant));
        for (const auto& [k, a] : r.terms) {
            double x = vals[static_cast<std::size_t>(k)];
            double term = a * (r.form == Form::loglinear ? log_input(plan.ids, k, x) : x);
            sum += term;
            scale = std::max(scale, std::abs(term));
        }
        double rel = std::abs(sum) / scale;
        if (!(rel <= out)) {
            out = rel;
            if (worst) *worst = r.id;
        }
    }
    return out;
}

void check_row(const SolvePlan& plan, const std::vector<double>& vals) {
    Id worst;
    double res = row_residual(plan, vals, &worst);
    if (!(res <= kResidualTolerance))
        throw DomainError("constraint '" + worst + "' is violated by " + std::to_string(res) +
                          " after solving; the system is inconsistent for these exogenous values");
}

double draw(const ExogenousDistribution& d, const Substream& s, std::uint64_t i) {
    switch (d.kind) {
        case DistributionKind::normal: return d.mean + d.sigma * s.normal(i);
        case DistributionKind::lognormal: return std::exp(d.mean + d.sigma * s.normal(i));
        case DistributionKind::uniform_positive: return d.low + (d.high - d.low) * s.uniform(i);
    }
    return 0.0;
}

}  // namespace

std::vector<ClusterSolveReport> check_solvability(const SystemOfConstraints& system, const DirectedClusterGraph& dcg) {
    SolvePlan plan = make_plan(system, dcg);
    std::vector<ClusterSolveReport> out;
    for (auto& c : plan.clusters) out.push_back(c.report);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return *a.cluster.begin() < *b.cluster.begin(); });
    return out;
}

std::vector<ClusterSolveReport> check_solvability(const SystemOfConstraints& system) {
    return check_solvability(system, order_cd(bipartite_of(system)));
}

Solution solve(const SystemOfConstraints& system, const std::map<Id, double>& exo_values) {
    SolvePlan plan = make_plan(system, order_cd(bipartite_of(system)));
    require_solvable(plan);
    std::vector<double> vals(plan.ids.size(), 0.0);
    for (int k : plan.exogenous) {
        const Id& w = plan.ids[static_cast<std::size_t>(k)];
        auto it = exo_values.find(w);
        if (it == exo_values.end()) throw InvalidArgument("no value given for exogenous variable '" + w + "'");
        vals[static_cast<std::size_t>(k)] = it->second;
    }
    for (const auto& [w, _] : exo_values)
        if (!system.has_variable(w) || !system.variable(w).exogenous)
            throw InvalidArgument("'" + w + "' is not an exogenous variable");
    solve_row(plan, vals);
    check_row(plan, vals);
    Solution out;
    for (std::size_t k = 0; k < vals.size(); ++k) out.values[plan.ids[k]] = vals[k];
    out.pseudo = plan.pseudo;
    return out;
}

double max_residual(const SystemOfConstraints& system, const std::map<Id, double>& values) {
    SolvePlan plan;
    for (const auto& v : system.variables) {
        plan.index[v.id] = static_cast<int>(plan.ids.size());
        plan.ids.push_back(v.id);
    }
    std::vector<double> vals(plan.ids.size(), 0.0);
    for (const auto& [id, x] : values) {
        auto it = plan.index.find(id);
        if (it == plan.index.end()) throw InvalidArgument("unknown variable '" + id + "'");
        vals[static_cast<std::size_t>(it->second)] = x;
    }
    for (const auto& c : system.constraints) {
        if (c.form == Form::opaque) continue;
        ConstraintRow row{c.id, c.form, {}, c.constant};
        for (const auto& [v, a] : c.coefficients) row.terms.emplace_back(plan.index.at(v), a);
        plan.rows.push_back(std::move(row));
    }
    return row_residual(plan, vals);
}

SampleBatch sample(const SystemOfConstraints& system, std::size_t n, std::uint64_t seed) {
    SolvePlan plan = make_plan(system, order_cd(bipartite_of(system)));
    require_solvable(plan);
    std::vector<Substream> streams;
    std::vector<ExogenousDistribution> dists;
    for (int k : plan.exogenous) {
        const auto& decl = system.variable(plan.ids[static_cast<std::size_t>(k)]);
        if (!decl.distribution) throw DomainError("exogenous variable '" + decl.id + "' has no distribution");
        streams.emplace_back(seed, decl.id);
        dists.push_back(*decl.distribution);
    }

    SampleBatch batch;
    batch.n = n;
    batch.seed = seed;
    batch.pseudo = plan.pseudo;
    std::vector<std::vector<double>> cols(plan.ids.size(), std::vector<double>(n));
    detail::parallel_for(n, 4096, [&](std::size_t begin, std::size_t end) {
        std::vector<double> vals(plan.ids.size(), 0.0);
        for (std::size_t i = begin; i < end; ++i) {
            for (std::size_t e = 0; e < plan.exogenous.size(); ++e)
                vals[static_cast<std::size_t>(plan.exogenous[e])] = draw(dists[e], streams[e], i);
            solve_row(plan, vals);
            check_row(plan, vals);
            for (std::size_t k = 0; k < vals.size(); ++k) cols[k][i] = vals[k];
        }
    });
    for (std::size_t k = 0; k < cols.size(); ++k) batch.columns[plan.ids[k]] = std::move(cols[k]);
    return batch;
}

SampleBatch log_transformed(const SampleBatch& batch, const VertexSet& vars) {
    SampleBatch out = batch;
    for (const auto& v : vars) {
        auto it = out.columns.find(v);
        if (it == out.columns.end()) throw InvalidArgument("no column for '" + v + "'");
        for (double& x : it->second) {
            if (!(x > 0.0)) throw DomainError("cannot log-transform nonpositive value of '" + v + "'");
            x = std::log(x);
        }
    }
    return out;
}

VertexSet log_scale_variables(const SystemOfConstraints& system) {
    VertexSet logs, lin;
    for (const auto& c : system.constraints)
        (c.form == Form::loglinear ? logs : lin).insert(c.variables.begin(), c.variables.end());
    VertexSet out;
    for (const auto& v : logs)
        if (!lin.count(v) && system.variable(v).domain == Domain::positive_real) out.insert(v);
    return out;
}

namespace {

struct Partial {
    double r = 0.0;
    bool degenerate = false;
};

// Correlation matrix of a fixed set of columns, computed once and queried
// for many (x, y, z) triples.
class CorrelationTable {
public:
    CorrelationTable(const SampleBatch& batch, const std::vector<Id>& ids) : n_(batch.n) {
        for (std::size_t k = 0; k < ids.size(); ++k) {
            auto it = batch.columns.find(ids[k]);
            if (it == batch.columns.end()) throw InvalidArgument("no column for '" + ids[k] + "'");
            if (it->second.size() != batch.n) throw InvalidArgument("column '" + ids[k] + "' has the wrong length");
            index_[ids[k]] = static_cast<Eigen::Index>(k);
        }
        const auto p = static_cast<Eigen::Index>(ids.size());
        Eigen::MatrixXd X(static_cast<Eigen::Index>(n_), p);
        for (Eigen::Index k = 0; k < p; ++k) {
            const auto& col = batch.columns.at(ids[static_cast<std::size_t>(k)]);
            double mean = 0.0;
            for (double v : col) mean += v;
            mean /= static_cast<double>(std::max<std::size_t>(1, n_));
            for (std::size_t i = 0; i < n_; ++i) X(static_cast<Eigen::Index>(i), k) = col[i] - mean;
        }
        Eigen::MatrixXd cov = X.transpose() * X;
        sd_ = cov.diagonal().cwiseSqrt();
        corr_ = Eigen::MatrixXd::Zero(p, p);
        for (Eigen::Index a = 0; a < p; ++a)
            for (Eigen::Index b = 0; b < p; ++b)
                if (sd_(a) > 0.0 && sd_(b) > 0.0) corr_(a, b) = cov(a, b) / (sd_(a) * sd_(b));
    }

    std::size_t n() const { return n_; }

    Partial partial(const Id& x, const Id& y, const VertexSet& z) const {
        Eigen::Index ix = at(x), iy = at(y);
        if (!(sd_(ix) > 0.0) || !(sd_(iy) > 0.0)) return {0.0, true};
        std::vector<Eigen::Index> zi;
        for (const auto& v : z) {
            Eigen::Index k = at(v);
            if (sd_(k) > 0.0) zi.push_back(k);
        }
        // Residual covariance of (x, y) after regressing both on [1, z].
        Eigen::Matrix2d S;
        S << corr_(ix, ix), corr_(ix, iy), corr_(iy, ix), corr_(iy, iy);
        if (!zi.empty()) {
            const auto k = static_cast<Eigen::Index>(zi.size());
            Eigen::MatrixXd Rzz(k, k), Rz(k, 2);
            for (Eigen::Index a = 0; a < k; ++a) {
                for (Eigen::Index b = 0; b < k; ++b) Rzz(a, b) = corr_(zi[a], zi[b]);
                Rz(a, 0) = corr_(zi[a], ix);
                Rz(a, 1) = corr_(zi[a], iy);
            }
            Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(Rzz);
            cod.setThreshold(1e-12);
            S -= Rz.transpose() * cod.solve(Rz);
        }
        constexpr double kDegenerate = 1e-12;
        if (S(0, 0) < kDegenerate || S(1, 1) < kDegenerate) return {0.0, true};
        double r = S(0, 1) / std::sqrt(S(0, 0) * S(1, 1));
        return {std::clamp(r, -1.0, 1.0), false};
    }

private:
    Eigen::Index at(const Id& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) throw InvalidArgument("no column for '" + v + "'");
        return it->second;
    }

    std::size_t n_;
    std::map<Id, Eigen::Index> index_;
    Eigen::VectorXd sd_;
    Eigen::MatrixXd corr_;
};

std::vector<Id> query_columns(const Id& x, const Id& y, const VertexSet& z) {
    if (x == y || z.count(x) || z.count(y)) throw InvalidArgument("x, y and z must be disjoint");
    std::vector<Id> ids{x, y};
    ids.insert(ids.end(), z.begin(), z.end());
    return ids;
}

void check_n(std::size_t n, const VertexSet& z) {
    if (n <= z.size() + 3)
        throw InvalidArgument("need more than " + std::to_string(z.size() + 3) + " samples, got " + std::to_string(n));
}

CIQueryResult test_query(const CorrelationTable& table, const Id& x, const Id& y, const VertexSet& z, double alpha) {
    CIQueryResult q;
    q.x = x;
    q.y = y;
    q.z = z;
    Partial p = table.partial(x, y, z);
    q.degenerate = p.degenerate;
    if (p.degenerate) return q;
    q.partial_corr = p.r;
    constexpr double kEdge = 1.0 - 1e-15;
    double dof = static_cast<double>(table.n()) - static_cast<double>(z.size()) - 3.0;
    q.z_stat = std::atanh(std::clamp(p.r, -kEdge, kEdge)) * std::sqrt(dof);
    q.p_value = std::clamp(std::erfc(std::abs(q.z_stat) / std::sqrt(2.0)), 0.0, 1.0);
    q.rejected = q.p_value < alpha;
    return q;
}

}  // namespace

double partial_correlation(const SampleBatch& batch, const Id& x, const Id& y, const VertexSet& z) {
    check_n(batch.n, z);
    CorrelationTable table(batch, query_columns(x, y, z));
    Partial p = table.partial(x, y, z);
    if (p.degenerate)
        throw DomainError("degenerate query: '" + x + "' or '" + y + "' has no variance left given " + format_set(z));
    return p.r;
}

CIQueryResult fisher_z_test(const SampleBatch& batch, const Id& x, const Id& y, const VertexSet& z, double alpha) {
    check_n(batch.n, z);
    CorrelationTable table(batch, query_columns(x, y, z));
    return test_query(table, x, y, z, alpha);
}

std::size_t MarkovReport::separated() const {
    return static_cast<std::size_t>(
        std::count_if(queries.begin(), queries.end(), [](const auto& q) { return q.predicted_independent; }));
}

std::size_t MarkovReport::separated_rejected() const {
    return static_cast<std::size_t>(std::count_if(queries.begin(), queries.end(), [](const auto& q) {
        return (q.predicted_independent || q.sigma_separated.value_or(false)) && q.rejected;
    }));
}

std::size_t MarkovReport::connected() const { return queries.size() - separated(); }

std::size_t MarkovReport::connected_rejected() const {
    return static_cast<std::size_t>(std::count_if(
        queries.begin(), queries.end(), [](const auto& q) { return !q.predicted_independent && q.rejected; }));
}

MarkovReport verify_markov(const SystemOfConstraints& system, double alpha, std::size_t n, std::uint64_t seed) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
    VertexSet endo = system.endogenous_ids();
    if (endo.size() > kMaxMarkovVariables)
        throw SizeLimitError("verify_markov supports at most " + std::to_string(kMaxMarkovVariables) +
                             " endogenous variables, got " + std::to_string(endo.size()));
    std::size_t max_z = std::min(kMaxConditioningSize, endo.size() < 2 ? 0 : endo.size() - 2);
    if (n <= max_z + 3) throw InvalidArgument("need more than " + std::to_string(max_z + 3) + " samples");

    BipartiteGraph bip = bipartite_of(system);
    DirectedMixedGraph mo = markov_ordering_graph(bip);
    std::optional<DirectedMixedGraph> sigma_graph;
    BipartiteGraph inner = endogenous_subgraph(bip);
    Matching m = maximum_matching(inner);
    if (m.size() == inner.V.size() && m.size() == inner.F.size())
        sigma_graph = marginalize(orient(bip, m), bip.F);

    SampleBatch batch = log_transformed(sample(system, n, seed), log_scale_variables(system));

    std::vector<Id> vars;
    for (const auto& v : endo)
        if (!batch.pseudo.count(v)) vars.push_back(v);
    CorrelationTable table(batch, vars);

    struct Query {
        Id x, y;
        VertexSet z;
    };
    std::vector<Query> queries;
    for (std::size_t a = 0; a < vars.size(); ++a)
        for (std::size_t b = a + 1; b < vars.size(); ++b) {
            std::vector<Id> rest;
            for (const auto& v : vars)
                if (v != vars[a] && v != vars[b]) rest.push_back(v);
            for (std::size_t k = 0; k <= std::min(kMaxConditioningSize, rest.size()); ++k) {
                std::vector<bool> pick(rest.size(), false);
                std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
                do {
                    VertexSet z;
                    for (std::size_t i = 0; i < rest.size(); ++i)
                        if (pick[i]) z.insert(rest[i]);
                    queries.push_back({vars[a], vars[b], std::move(z)});
                } while (std::prev_permutation(pick.begin(), pick.end()));
            }
        }

    MarkovReport report;
    report.alpha = alpha;
    report.n = n;
    report.seed = seed;
    report.queries.resize(queries.size());
    detail::parallel_for(queries.size(), 16, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto& q = queries[i];
            CIQueryResult r = test_query(table, q.x, q.y, q.z, alpha);
            r.predicted_independent = d_separated(mo, {q.x}, {q.y}, q.z);
            if (sigma_graph) r.sigma_separated = sigma_separated(*sigma_graph, {q.x}, {q.y}, q.z);
            report.queries[i] = std::move(r);
        }
    });
    return report;
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) return 0.0;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        double t = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= t) ++i;
        while (j < b.size() && b[j] <= t) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

bool InterventionReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

InterventionReport verify_intervention_effects(const SystemOfConstraints& system, const InterventionSpec& spec,
                                               std::size_t n, std::uint64_t seed) {
    BipartiteGraph bip = bipartite_of(system);
    EffectPrediction prediction;
    if (const auto* soft = std::get_if<SoftInterventionSpec>(&spec)) {
        prediction = predict_soft_effects(bip, soft->target);
    } else {
        const auto& perfect = std::get<PerfectInterventionSpec>(spec);
        prediction = predict_perfect_effects(bip, perfect.constraints(), perfect.variables());
    }
    SystemOfConstraints intervened = apply_intervention(system, spec);
    SampleBatch before = sample(system, n, seed);
    SampleBatch after = sample(intervened, n, seed);

    InterventionReport report;
    report.spec = intervention_to_json(spec);
    VertexSet all = prediction.generic;
    all.insert(prediction.none.begin(), prediction.none.end());
    for (const auto& v : all) {
        EffectCheck check;
        check.variable = v;
        check.predicted_effect = prediction.generic.count(v) > 0;
        const auto& x = before.columns.at(v);
        const auto& y = after.columns.at(v);
        for (std::size_t i = 0; i < n; ++i) check.max_abs_diff = std::max(check.max_abs_diff, std::abs(x[i] - y[i]));
        check.ks_statistic = ks_statistic(x, y);
        check.passed = check.predicted_effect || check.max_abs_diff < kNonEffectTolerance;
        report.checks.push_back(std::move(check));
    }
    return report;
}

std::string report_json(const std::vector<ClusterSolveReport>& solvability, const MarkovReport* markov,
                        const InterventionReport* interventions) {
    json root;
    root["solvability"] = json::array();
    for (const auto& s : solvability)
        root["solvability"].push_back({{"cluster", s.cluster},
                                       {"region", to_string(s.region)},
                                       {"solvable", s.solvable},
                                       {"unique", s.unique},
                                       {"condition", s.condition}});
    root["markov"] = json::array();
    if (markov)
        for (const auto& q : markov->queries) {
            json j = {{"x", q.x},
                      {"y", q.y},
                      {"z", q.z},
                      {"partial_corr", q.partial_corr},
                      {"z_stat", q.z_stat},
                      {"p_value", q.p_value},
                      {"predicted_independent", q.predicted_independent},
                      {"rejected", q.rejected},
                      {"degenerate", q.degenerate}};
            if (q.sigma_separated) j["sigma_separated"] = *q.sigma_separated;
            root["markov"].push_back(std::move(j));
        }
    root["interventions"] = json::array();
    if (interventions) {
        json checks = json::array();
        for (const auto& c : interventions->checks)
            checks.push_back({{"variable", c.variable},
                              {"predicted_effect", c.predicted_effect},
                              {"max_abs_diff", c.max_abs_diff},
                              {"ks_statistic", c.ks_statistic},
                              {"passed", c.passed}});
        root["interventions"].push_back({{"spec", json::parse(interventions->spec)},
                                         {"passed", interventions->passed()},
                                         {"checks", std::move(checks)}});
    }
    return root.dump(2) + "\n";
}

std::string report_table(const std::vector<ClusterSolveReport>& solvability, const MarkovReport* markov,
                         const InterventionReport* interventions) {
    std::ostringstream out;
    out << "solvability\n";
    for (const auto& s : solvability)
        out << "  " << std::left << std::setw(28) << format_set(s.cluster) << std::setw(13) << to_string(s.region)
            << (s.solvable ? (s.unique ? "unique   " : "solvable ") : "UNSOLVABLE") << " condition "
            << std::scientific << std::setprecision(3) << s.condition << std::defaultfloat << "\n";
    if (markov) {
        out << "markov (alpha " << markov->alpha << ", n " << markov->n << ", seed " << markov->seed << ")\n";
        for (const auto& q : markov->queries) {
            if (!q.predicted_independent && !q.sigma_separated.value_or(false)) continue;
            out << "  " << q.x << " _||_ " << q.y << " | " << format_set(q.z) << "  r=" << std::fixed
                << std::setprecision(4) << q.partial_corr << " p=" << q.p_value << std::defaultfloat
                << (q.degenerate ? "  degenerate" : "") << (q.rejected ? "  REJECTED" : "  ok") << "\n";
        }
        out << "  separated " << markov->separated() << " (rejected " << markov->separated_rejected()
            << "), connected " << markov->connected() << " (rejected " << markov->connected_rejected() << ")\n";
    }
    if (interventions) {
        out << "intervention " << interventions->spec << "\n";
        for (const auto& c : interventions->checks)
            out << "  " << std::left << std::setw(12) << c.variable << (c.predicted_effect ? "effect    " : "no effect ")
                << " max|diff| " << std::scientific << std::setprecision(3) << c.max_abs_diff << " ks "
                << std::fixed << std::setprecision(4) << c.ks_statistic << std::defaultfloat
                << (c.passed ? "" : "  FAILED") << "\n";
    }
    return out.str();
}

}  // namespace causalorder
