// qconcept command-line front end: classification runs, figure-data
// emission, property-suite execution and fuzzy/quantum side-by-side
// reports.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qconcept/classifier.hpp"
#include "qconcept/config.hpp"
#include "qconcept/fuzzy.hpp"
#include "qconcept/kernel.hpp"
#include "qconcept/property_checks.hpp"
#include "qconcept/states.hpp"

namespace {

using namespace qconcept;

constexpr int exit_ok = 0;
constexpr int exit_computation = 1;
constexpr int exit_usage = 2;

// Fixed table formatting: 6 decimals, round-half-even (IEEE default).
std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

// CSV numbers carry 12 significant digits; tables stay at 6 decimals.
std::string csv_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string winner_text(const classification_result& r) {
    if (!r.is_tie()) return r.winners.front();
    std::string out = "TIE{";
    for (std::size_t i = 0; i < r.winners.size(); ++i) {
        if (i) out += ",";
        out += r.winners[i];
    }
    return out + "}";
}

void write_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + output_path);
    out << text;
}

struct global_options {
    std::string config_path;
    std::string format = "table";
    std::string output_path;
    std::uint64_t seed = 42;
};

nlohmann::json result_to_json(const classification_result& r) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"name", e.name},
                           {"raw_score", e.raw_score},
                           {"probability", e.probability}});
    return {{"entries", entries}, {"winners", r.winners}, {"tie", r.is_tie()}};
}

int cmd_classify(const global_options& opts, std::optional<double> mu,
                 std::optional<double> sigma) {
    const concept_config cfg = load_config(opts.config_path);
    const gaussian_state object(mu.value_or(cfg.object_mu), sigma.value_or(cfg.object_sigma));

    std::vector<concept_entry> registry;
    for (const auto& c : cfg.concepts)
        registry.push_back({c.name, gaussian_state(c.mu, c.sigma)});
    const classification_result result = classify(registry, object);

    std::ostringstream out;
    if (opts.format == "json") {
        nlohmann::json doc;
        doc["config"] = config_to_json(cfg);
        doc["object"] = {{"mu", object.mu()}, {"sigma", object.sigma()}};
        doc["result"] = result_to_json(result);
        out << doc.dump(2) << "\n";
    } else {
        out << pad("concept", 16) << pad("raw_score", 12) << "probability\n";
        for (const auto& e : result.entries)
            out << pad(e.name, 16) << pad(fixed6(e.raw_score), 12) << fixed6(e.probability)
                << "\n";
        out << "winner: " << winner_text(result) << "\n";
    }
    write_output(out.str(), opts.output_path);
    return exit_ok;
}

int cmd_emit_figure(const global_options& opts, const std::string& which) {
    const concept_config cfg = load_config(opts.config_path);
    const gaussian_state object(cfg.object_mu, cfg.object_sigma);

    std::vector<gaussian_state> all = config_states(cfg);
    all.push_back(object);
    const grid g = cfg.grid_spec
                       ? grid(cfg.grid_spec->x_min, cfg.grid_spec->x_max, cfg.grid_spec->n_points)
                       : default_grid(all);

    std::vector<grid_state> discretized;
    for (const auto& s : all) discretized.push_back(discretize_plot(s, g));

    std::ostringstream out;
    out << "x";
    for (const auto& c : cfg.concepts) out << "," << c.name;
    out << ",object";
    if (which == "densities")
        for (const auto& c : cfg.concepts) out << ",overlap_" << c.name;
    out << "\n";

    const auto& obj_amps = discretized.back().amplitudes();
    for (int i = 0; i < g.n_points(); ++i) {
        out << csv_num(g.x(i));
        for (std::size_t k = 0; k < all.size(); ++k) {
            const double psi = discretized[k].amplitudes()[i].real();
            out << "," << csv_num(which == "densities" ? psi * psi : psi);
        }
        if (which == "densities")
            for (std::size_t k = 0; k + 1 < all.size(); ++k)
                out << ","
                    << csv_num(obj_amps[i].real() * discretized[k].amplitudes()[i].real());
        out << "\n";
    }
    write_output(out.str(), opts.output_path);
    return exit_ok;
}

int report_axioms(std::ostream& out, const km_axiom_report& report) {
    int failures = 0;
    for (const auto& check : report.checks) {
        out << (check.passed ? "PASS " : "FAIL ") << check.name;
        if (!check.passed && check.counterexample)
            out << "  counterexample: " << *check.counterexample;
        out << "\n";
        failures += check.passed ? 0 : 1;
    }
    return failures;
}

int cmd_metric_check(const global_options& opts, int trials, bool inject_fault) {
    if (trials < 1) {
        std::cerr << "metric-check: trials must be >= 1\n";
        return exit_usage;
    }
    std::ostringstream out;
    int failures = 0;
    failures += report_axioms(out, check_metric_axioms(trials, opts.seed, inject_fault));
    failures += report_axioms(out, check_tnorm_axioms(trials, opts.seed + 1));
    const auto tuples = sample_km_tuples(trials, opts.seed + 2);
    failures += report_axioms(out,
                              check_km_axioms(indicator_fuzzy_metric{}, t_norm::minimum, tuples));
    out << (failures == 0 ? "all axioms passed\n"
                          : std::to_string(failures) + " axiom(s) failed\n");
    write_output(out.str(), opts.output_path);
    return failures == 0 ? exit_ok : exit_computation;
}

int cmd_compare_fuzzy(const global_options& opts, double x) {
    const concept_config cfg = load_config(opts.config_path);
    if (cfg.memberships.empty()) {
        std::cerr << "compare-fuzzy: config has no memberships\n";
        return exit_usage;
    }
    const gaussian_state object(cfg.object_mu, cfg.object_sigma);

    std::vector<concept_entry> registry;
    for (const auto& c : cfg.concepts)
        registry.push_back({c.name, gaussian_state(c.mu, c.sigma)});
    const classification_result quantum = classify(registry, object);

    std::vector<named_membership> memberships;
    for (const auto& e : quantum.entries) {
        const auto it = std::find_if(cfg.memberships.begin(), cfg.memberships.end(),
                                     [&](const auto& m) { return m.name == e.name; });
        if (it == cfg.memberships.end()) {
            std::cerr << "compare-fuzzy: no membership configured for concept '" << e.name
                      << "'\n";
            return exit_usage;
        }
        memberships.push_back({it->name, triangular_membership(it->center, it->half_width)});
    }
    const classification_result fuzzy = fuzzy_classify(memberships, x);

    std::ostringstream out;
    out << pad("concept", 16) << pad("quantum_raw", 13) << pad("quantum_prob", 14)
        << pad("fuzzy_raw", 11) << "fuzzy_prob\n";
    for (std::size_t i = 0; i < quantum.entries.size(); ++i) {
        const auto& q = quantum.entries[i];
        const auto& f = fuzzy.entries[i];
        out << pad(q.name, 16) << pad(fixed6(q.raw_score), 13) << pad(fixed6(q.probability), 14)
            << pad(fixed6(f.raw_score), 11) << fixed6(f.probability) << "\n";
    }
    out << "quantum winner: " << winner_text(quantum) << "\n";
    out << "fuzzy winner:   " << winner_text(fuzzy) << "\n";
    const bool agree = quantum.winners == fuzzy.winners;
    out << "decisions agree: " << (agree ? "yes" : "no") << "\n";

    double fuzzy_total = 0.0;
    for (const auto& e : fuzzy.entries) fuzzy_total += e.raw_score;
    if (fuzzy_total == 0.0)
        out << "note: every membership vanishes at x=" << fixed6(x)
            << " while the quantum raw scores stay positive\n";
    write_output(out.str(), opts.output_path);
    return exit_ok;
}

int cmd_kernel_matrix(const global_options& opts) {
    const concept_config cfg = load_config(opts.config_path);
    std::vector<named_state> states;
    for (const auto& c : cfg.concepts) states.push_back({c.name, {c.mu, c.sigma}});
    states.push_back({"object", {cfg.object_mu, cfg.object_sigma}});
    const auto km = kernel_matrix(states);

    std::ostringstream out;
    out << "name";
    for (const auto& label : km.labels) out << "," << label;
    out << "\n";
    for (std::size_t i = 0; i < km.labels.size(); ++i) {
        out << km.labels[i];
        for (const double v : km.entries[i]) out << "," << csv_num(v);
        out << "\n";
    }
    write_output(out.str(), opts.output_path);
    return exit_ok;
}

int cmd_interference(const global_options& opts, double phase) {
    const concept_config cfg = load_config(opts.config_path);
    if (cfg.concepts.size() < 2) {
        std::cerr << "interference: config needs at least two concepts\n";
        return exit_usage;
    }
    const gaussian_state object(cfg.object_mu, cfg.object_sigma);
    const gaussian_state a(cfg.concepts[0].mu, cfg.concepts[0].sigma);
    const gaussian_state b(cfg.concepts[1].mu, cfg.concepts[1].sigma);

    const std::vector<gaussian_state> all{a, b, object};
    const grid g = cfg.grid_spec
                       ? grid(cfg.grid_spec->x_min, cfg.grid_spec->x_max, cfg.grid_spec->n_points)
                       : default_grid(all);
    const auto scores = interference_demo(state_variant{discretize(object, g)},
                                          discretize(a, g), discretize(b, g), phase);

    std::ostringstream out;
    out << "components: " << cfg.concepts[0].name << " + " << cfg.concepts[1].name << "\n";
    out << "constructive (phase=0):      " << fixed6(scores.constructive) << "\n";
    out << "dephased (phase=" << fixed6(phase) << "): " << fixed6(scores.dephased) << "\n";
    write_output(out.str(), opts.output_path);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concepts as normalized wavefunctions: Born-rule classification "
                 "with a fuzzy-logic baseline"};
    app.require_subcommand(1);
    app.fallthrough();

    global_options opts;
    app.add_option("--config", opts.config_path, "concept configuration file (JSON)");
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"table", "json"}));
    app.add_option("--output", opts.output_path, "write output to this file");
    app.add_option("--seed", opts.seed, "random seed for property suites");

    auto* classify_cmd = app.add_subcommand("classify", "score an object against the concepts");
    std::optional<double> obj_mu, obj_sigma;
    classify_cmd->add_option("--mu", obj_mu, "object center (default from config)");
    classify_cmd->add_option("--sigma", obj_sigma, "object width (default from config)");

    auto* figure_cmd = app.add_subcommand("emit-figure", "write wavefunction/density CSV data");
    std::string which = "densities";
    figure_cmd->add_option("--which", which, "wavefunctions or densities")
        ->check(CLI::IsMember({"wavefunctions", "densities"}));

    auto* metric_cmd = app.add_subcommand("metric-check", "run the metric/t-norm/KM axiom suites");
    int trials = 1000;
    bool inject_fault = false;
    metric_cmd->add_option("--trials", trials, "number of random tuples");
    metric_cmd->add_flag("--inject-fault", inject_fault)->group("");  // test harness only

    auto* fuzzy_cmd = app.add_subcommand("compare-fuzzy", "quantum vs triangular memberships");
    double fuzzy_x = 3.0;
    fuzzy_cmd->add_option("--x", fuzzy_x, "feature value for membership evaluation");

    auto* kernel_cmd =
        app.add_subcommand("kernel-matrix", "emit the concept Gram matrix as CSV");

    auto* interference_cmd =
        app.add_subcommand("interference", "superposition scores for the first two concepts");
    double phase = std::numbers::pi;
    interference_cmd->add_option("--phase", phase, "relative phase (default pi)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (app.got_subcommand(classify_cmd)) return cmd_classify(opts, obj_mu, obj_sigma);
        if (app.got_subcommand(figure_cmd)) return cmd_emit_figure(opts, which);
        if (app.got_subcommand(metric_cmd)) return cmd_metric_check(opts, trials, inject_fault);
        if (app.got_subcommand(fuzzy_cmd)) return cmd_compare_fuzzy(opts, fuzzy_x);
        if (app.got_subcommand(kernel_cmd)) return cmd_kernel_matrix(opts);
        if (app.got_subcommand(interference_cmd)) return cmd_interference(opts, phase);
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_computation;
    }
    return exit_usage;
}
