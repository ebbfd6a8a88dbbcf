#include "cli.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "causalorder/causal_ordering.hpp"
#include "causalorder/constraint_system.hpp"
#include "causalorder/errors.hpp"
#include "causalorder/graph_io.hpp"
#include "causalorder/interventions.hpp"
#include "causalorder/markov_graph.hpp"
#include "causalorder/numeric_verify.hpp"

namespace causalorder::cli {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& text, const std::string& what) {
    std::string t = trim(text);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw InvalidArgument("bad number '" + text + "' for " + what);
    return value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write '" + path + "'");
    out << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!trim(item).empty()) out.push_back(trim(item));
    return out;
}

// f:v=VAL[,f:v=VAL...]; the value is optional when `need_value` is false.
PerfectInterventionSpec parse_perfect(const std::string& text, bool need_value) {
    PerfectInterventionSpec spec;
    for (const auto& item : split(text, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw InvalidArgument("expected f:v in '" + item + "'");
        PerfectTarget t;
        t.constraint = trim(item.substr(0, colon));
        std::string rest = item.substr(colon + 1);
        auto eq = rest.find('=');
        t.variable = trim(rest.substr(0, eq));
        if (eq != std::string::npos)
            t.value = parse_number(rest.substr(eq + 1), item);
        else if (need_value)
            throw InvalidArgument("missing value in '" + item + "'");
        if (t.constraint.empty() || t.variable.empty()) throw InvalidArgument("expected f:v in '" + item + "'");
        spec.pairs.push_back(std::move(t));
    }
    if (spec.pairs.empty()) throw InvalidArgument("empty perfect intervention");
    return spec;
}

Form parse_form(const std::string& s) {
    if (s == "opaque") return Form::opaque;
    if (s == "linear") return Form::linear;
    if (s == "loglinear") return Form::loglinear;
    throw InvalidArgument("unknown form '" + s + "'");
}

// Unspecified parts keep the target constraint's current numeric form.
SoftInterventionSpec soft_from(const SystemOfConstraints& system, const std::string& target,
                               const std::optional<std::string>& form, const std::vector<std::string>& coeffs,
                               const std::optional<double>& constant) {
    if (!system.has_constraint(target)) throw InvalidArgument("unknown constraint '" + target + "'");
    const auto& c = system.constraint(target);
    SoftInterventionSpec spec{target, c.form, c.coefficients, c.constant};
    if (form) spec.new_form = parse_form(*form);
    if (!coeffs.empty()) {
        spec.coefficients.clear();
        for (const auto& item : coeffs) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw InvalidArgument("expected id=VAL in '" + item + "'");
            spec.coefficients[trim(item.substr(0, eq))] = parse_number(item.substr(eq + 1), item);
        }
    }
    if (constant) spec.new_constant = *constant;
    return spec;
}

// A JSON file, inline JSON, "soft f [form=F] [id=VAL ...] [constant=VAL]", or f:v=VAL,...
InterventionSpec parse_intervention_arg(const SystemOfConstraints& system, const std::string& text) {
    std::string t = trim(text);
    if (!t.empty() && t.front() == '{') return parse_intervention_json(t);
    if (std::filesystem::is_regular_file(t)) return parse_intervention_json(read_file(t));
    if (t.rfind("soft ", 0) == 0) {
        auto words = split(t.substr(5), ' ');
        if (words.empty()) throw InvalidArgument("soft intervention needs a target");
        std::optional<std::string> form;
        std::optional<double> constant;
        std::vector<std::string> coeffs;
        for (std::size_t i = 1; i < words.size(); ++i) {
            auto eq = words[i].find('=');
            if (eq == std::string::npos) throw InvalidArgument("expected key=VAL in '" + words[i] + "'");
            std::string key = words[i].substr(0, eq);
            if (key == "form")
                form = words[i].substr(eq + 1);
            else if (key == "constant")
                constant = parse_number(words[i].substr(eq + 1), words[i]);
            else
                coeffs.push_back(words[i]);
        }
        return soft_from(system, words[0], form, coeffs, constant);
    }
    return parse_perfect(t, true);
}

enum class Format { json, dot };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "dot") return Format::dot;
    throw InvalidArgument("unknown format '" + s + "'");
}

std::string render(const DirectedClusterGraph& dcg, const BipartiteGraph& bip, Format f) {
    return f == Format::json ? cluster_graph_to_json(dcg) : cluster_graph_to_dot(dcg, bip.F, bip.W);
}

std::string render(const DirectedMixedGraph& g, const BipartiteGraph& bip, Format f) {
    return f == Format::json ? mixed_graph_to_json(g) : mixed_graph_to_dot(g, bip.W);
}

struct Options {
    std::string input;
    std::string graph;
    std::string algorithm = "cd";
    std::string format = "json";
    bool restricted = false;
    std::string x, y, given;
    std::string perfect;
    std::string soft;
    std::optional<std::string> form;
    std::vector<std::string> coeffs;
    std::optional<double> constant;
    std::string spec_file;
    std::string output;
    double alpha = 0.01;
    std::size_t n = 100000;
    std::uint64_t seed = 0;
    std::string intervention;
    std::string report;
    std::string what = "co";
};

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    SystemOfConstraints s = load_system(o.input);
    for (const auto& w : warnings(s)) err << "warning: " << w << "\n";
    out << "valid: " << s.variables.size() << " variables (" << s.exogenous_ids().size() << " exogenous), "
        << s.constraints.size() << " constraints\n";
    return 0;
}

int cmd_order(const Options& o, std::ostream& out) {
    BipartiteGraph bip = bipartite_of(load_system(o.input));
    DirectedClusterGraph dcg;
    if (o.algorithm == "cd")
        dcg = order_cd(bip);
    else if (o.algorithm == "pm")
        dcg = order_pm(bip);
    else if (o.algorithm == "msc")
        dcg = order_msc(bip);
    else
        throw InvalidArgument("unknown algorithm '" + o.algorithm + "'");
    out << render(dcg, bip, parse_format(o.format));
    return 0;
}

int cmd_markov(const Options& o, std::ostream& out) {
    BipartiteGraph bip = bipartite_of(load_system(o.input));
    DirectedMixedGraph g = o.restricted ? markov_ordering_restricted(bip) : markov_ordering_graph(bip);
    out << render(g, bip, parse_format(o.format));
    return 0;
}

int cmd_separation(const Options& o, bool sigma, std::ostream& out) {
    if (o.input.empty() == o.graph.empty()) throw InvalidArgument("give exactly one of --input and --graph");
    DirectedMixedGraph g;
    if (!o.graph.empty()) {
        g = mixed_graph_from_json(read_file(o.graph));
    } else {
        BipartiteGraph bip = bipartite_of(load_system(o.input));
        if (sigma)
            g = marginalize(orient(bip, perfect_matching(endogenous_subgraph(bip))), bip.F);
        else
            g = markov_ordering_graph(bip);
    }
    VertexSet X = parse_id_list(o.x), Y = parse_id_list(o.y), Z = parse_id_list(o.given);
    bool sep = sigma ? sigma_separated(g, X, Y, Z) : d_separated(g, X, Y, Z);
    out << "separated: " << (sep ? "true" : "false") << "\n";
    return 0;
}

int cmd_intervene(const Options& o, std::ostream& out) {
    SystemOfConstraints s = load_system(o.input);
    int given = !o.perfect.empty() + !o.soft.empty() + !o.spec_file.empty();
    if (given != 1) throw InvalidArgument("give exactly one of --perfect, --soft and --spec");
    InterventionSpec spec;
    if (!o.perfect.empty())
        spec = parse_perfect(o.perfect, true);
    else if (!o.soft.empty())
        spec = soft_from(s, o.soft, o.form, o.coeffs, o.constant);
    else
        spec = parse_intervention_json(read_file(o.spec_file));
    std::string text = serialize(apply_intervention(s, spec));
    if (o.output.empty())
        out << text;
    else
        write_file(o.output, text);
    return 0;
}

int cmd_predict(const Options& o, std::ostream& out) {
    BipartiteGraph bip = bipartite_of(load_system(o.input));
    if (o.perfect.empty() == o.soft.empty()) throw InvalidArgument("give exactly one of --soft and --perfect");
    EffectPrediction p;
    if (!o.soft.empty()) {
        p = predict_soft_effects(bip, o.soft);
    } else {
        PerfectInterventionSpec spec = parse_perfect(o.perfect, false);
        p = predict_perfect_effects(bip, spec.constraints(), spec.variables());
    }
    out << "generic: " << format_set(p.generic) << "\n";
    out << "none: " << format_set(p.none) << "\n";
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
    SystemOfConstraints s = load_system(o.input);
    auto solvability = check_solvability(s);
    MarkovReport markov = verify_markov(s, o.alpha, o.n, o.seed);
    std::optional<InterventionReport> effects;
    if (!o.intervention.empty())
        effects = verify_intervention_effects(s, parse_intervention_arg(s, o.intervention), o.n, o.seed);
    const InterventionReport* ep = effects ? &*effects : nullptr;
    out << report_table(solvability, &markov, ep);
    if (!o.report.empty()) write_file(o.report, report_json(solvability, &markov, ep));
    if (effects && !effects->passed()) throw DomainError("a predicted non-effect changed under the intervention");
    return 0;
}

int cmd_export(const Options& o, std::ostream& out) {
    BipartiteGraph bip = bipartite_of(load_system(o.input));
    Format f = parse_format(o.format);
    if (o.what == "bipartite")
        out << (f == Format::json ? bipartite_to_json(bip) : bipartite_to_dot(bip));
    else if (o.what == "co")
        out << render(order_cd(bip), bip, f);
    else if (o.what == "mo")
        out << render(markov_ordering_graph(bip), bip, f);
    else
        throw InvalidArgument("unknown export target '" + o.what + "'");
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Causal ordering, Markov ordering and intervention analysis for systems of constraints",
                 "causalorder"};
    app.require_subcommand(1);
    Options o;

    auto input = [&](CLI::App* sub, bool required = true) {
        auto* opt = sub->add_option("--input,-i", o.input, "System of constraints (JSON)");
        if (required) opt->required();
    };
    auto format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot"}));
    };

    auto* validate = app.add_subcommand("validate", "Check a system file");
    input(validate);

    auto* order = app.add_subcommand("order", "Causal ordering graph");
    input(order);
    order->add_option("--algorithm", o.algorithm, "msc, pm or cd")->check(CLI::IsMember({"msc", "pm", "cd"}));
    format(order);

    auto* markov = app.add_subcommand("markov", "Markov ordering graph");
    input(markov);
    markov->add_flag("--restricted", o.restricted, "Drop the incomplete part");
    format(markov);

    std::vector<CLI::App*> seps;
    for (const char* name : {"dsep", "sigsep"}) {
        auto* sub = app.add_subcommand(name, std::string(name) == "dsep" ? "d-separation query" : "sigma-separation query");
        input(sub, false);
        sub->add_option("--graph", o.graph, "Directed mixed graph (JSON)");
        sub->add_option("--x", o.x, "Comma-separated ids")->required();
        sub->add_option("--y", o.y, "Comma-separated ids")->required();
        sub->add_option("--given", o.given, "Comma-separated ids");
        seps.push_back(sub);
    }

    auto* intervene = app.add_subcommand("intervene", "Apply an intervention and write the new system");
    input(intervene);
    intervene->add_option("--perfect", o.perfect, "f:v=VAL[,f:v=VAL...]");
    intervene->add_option("--soft", o.soft, "Target constraint");
    intervene->add_option("--form", o.form, "New form for --soft");
    intervene->add_option("--coeff", o.coeffs, "id=VAL, repeatable");
    intervene->add_option("--constant", o.constant, "New constant for --soft");
    intervene->add_option("--spec", o.spec_file, "Intervention JSON file");
    intervene->add_option("--output,-o", o.output, "Output path (default: standard output)");

    auto* predict = app.add_subcommand("predict", "Generic effects and non-effects of an intervention");
    input(predict);
    predict->add_option("--soft", o.soft, "Target constraint");
    predict->add_option("--perfect", o.perfect, "f:v[,f:v...]");

    auto* verify = app.add_subcommand("verify", "Numerical verification of the Markov property and effects");
    input(verify);
    verify->add_option("--alpha", o.alpha, "Significance level")->capture_default_str();
    verify->add_option("--n", o.n, "Sample size")->capture_default_str();
    verify->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    verify->add_option("--intervention", o.intervention, "Inline spec or JSON file");
    verify->add_option("--report", o.report, "Write the JSON report here");

    auto* exp = app.add_subcommand("export", "Export a graph");
    input(exp);
    exp->add_option("--what", o.what, "bipartite, co or mo")->check(CLI::IsMember({"bipartite", "co", "mo"}));
    format(exp);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        err << "error: " << (msg.empty() ? "invalid arguments" : msg) << "\n";
        return 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(o, out, err);
        if (order->parsed()) return cmd_order(o, out);
        if (markov->parsed()) return cmd_markov(o, out);
        if (seps[0]->parsed()) return cmd_separation(o, false, out);
        if (seps[1]->parsed()) return cmd_separation(o, true, out);
        if (intervene->parsed()) return cmd_intervene(o, out);
        if (predict->parsed()) return cmd_predict(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (exp->parsed()) return cmd_export(o, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace causalorder::cli
