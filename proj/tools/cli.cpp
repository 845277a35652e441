#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "antiramsey/audit.hpp"
#include "antiramsey/coloring.hpp"
#include "antiramsey/decompose.hpp"
#include "antiramsey/density.hpp"
#include "antiramsey/errors.hpp"
#include "antiramsey/experiments.hpp"
#include "antiramsey/serialize.hpp"

namespace antiramsey::cli {

namespace {

using io::json;

struct Options {
    std::string graph;
    std::string pattern;
    std::string config;
    std::string out;
    std::string decomposition;
    std::string coloring;
    std::string csv;
    std::optional<std::uint64_t> seed;
    std::optional<int> trials;
    std::optional<int> max_edges;
    bool tight_mu = false;
    bool guarantee_only = false;
    bool json_output = false;
    bool brute_force = false;
    bool core = false;
};

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InputError("cannot write " + path);
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::string join(const std::vector<Vertex>& v) {
    std::ostringstream out;
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    return out.str();
}

int cmd_density(const Options& o, std::ostream& out) {
    Graph g = read_graph_file(o.graph);
    DensityWitness w = o.brute_force ? max_density_bruteforce(g) : max_density(g);
    Output sink(o.out, out);
    if (o.json_output) {
        sink.get() << json{{"m", w.value.str()}, {"witness", io::witness_json(w)}}.dump(2) << '\n';
    } else {
        sink.get() << "m = " << w.value << '\n'
                   << "witness: " << w.vertex_count << " vertices, " << w.edge_count << " edges\n"
                   << "vertices: " << join(w.vertices) << '\n';
    }
    return kExitOk;
}

int cmd_two_density(const Options& o, std::ostream& out) {
    Graph h = read_graph_file(o.graph);
    TwoDensity m2 = max_two_density(h);
    Output sink(o.out, out);
    std::optional<InducedSubgraph> core;
    if (o.core) core = strictly_two_balanced_core(h);
    if (o.json_output) {
        json doc{{"m2", m2.value.str()}, {"witness", m2.witness ? io::witness_json(*m2.witness) : json(nullptr)}};
        if (core) doc["core"] = {{"vertices", core->original}, {"edge_count", core->graph.edge_count()}};
        sink.get() << doc.dump(2) << '\n';
        return kExitOk;
    }
    sink.get() << "m2 = " << m2.value << '\n';
    if (m2.witness) {
        sink.get() << "witness: " << m2.witness->vertex_count << " vertices, " << m2.witness->edge_count << " edges\n"
                   << "vertices: " << join(m2.witness->vertices) << '\n';
    } else {
        sink.get() << "witness: none (value is the 1/2 floor)\n";
    }
    if (core) sink.get() << "strictly 2-balanced core: " << join(core->original) << '\n';
    return kExitOk;
}

int cmd_degeneracy(const Options& o, std::ostream& out) {
    Graph g = read_graph_file(o.graph);
    DegeneracyOrdering d = degeneracy_ordering(g);
    Output sink(o.out, out);
    if (o.json_output) {
        sink.get() << json{{"degeneracy", d.degeneracy}, {"order", d.order}}.dump(2) << '\n';
    } else {
        sink.get() << "degeneracy = " << d.degeneracy << '\n' << "order: " << join(d.order) << '\n';
    }
    return kExitOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
    Graph g = read_graph_file(o.graph);
    Decomposition d = degenerate_decomposition(g, {.tight_mu = o.tight_mu});
    Output sink(o.out, out);
    sink.get() << io::decomposition_json(d).dump(2) << '\n';
    return kExitOk;
}

int cmd_color(const Options& o, std::ostream& out, std::ostream& err) {
    Graph g = read_graph_file(o.graph);
    if (o.guarantee_only && g.edge_count() > 0) {
        Rational m = max_density(g).value;
        if (m < Rational(kGuaranteeThreshold)) {
            err << "error: m(G) = " << m << " is below " << kGuaranteeThreshold
                << "; refusing because --guarantee-only was given\n";
            return kExitUsage;
        }
    }
    ColoringResult result = anti_rainbow_coloring(g, {.tight_mu = o.tight_mu});
    if (!result.coloring.guarantee) {
        err << "warning: m(G) = " << result.coloring.m_value << " < " << kGuaranteeThreshold
            << "; the colouring is proper but rainbow subgraphs of 2-density >= m(G) are not excluded\n";
    }
    Output sink(o.out, out);
    sink.get() << io::coloring_json(g, result.coloring).dump(2) << '\n';
    return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.decomposition.empty() && o.coloring.empty()) {
        throw InputError("check: give --decomposition and/or --coloring");
    }
    Graph g = read_graph_file(o.graph);
    Report report;
    std::optional<EdgeColoring> col;
    if (!o.coloring.empty()) {
        col = io::coloring_from_json(io::read_json_file(o.coloring), g);
        report.add("proper_coloring", is_proper_coloring(g, *col));
    }
    Decomposition dec = !o.decomposition.empty() ? io::decomposition_from_json(io::read_json_file(o.decomposition))
                                                 : io::decomposition_from_coloring(*col);
    report.append(verify_decomposition(g, dec));
    if (col) report.append(certificate_check(g, dec, *col));
    if (col && o.max_edges) {
        AuditResult audit = rainbow_subgraph_audit(g, *col, *o.max_edges);
        std::string details = std::to_string(audit.violations.size()) + " rainbow subgraphs with d2 >= m among " +
                              std::to_string(audit.subgraphs_examined) + " examined";
        if (audit.violations.empty()) {
            report.add("rainbow_audit", true, details);
        } else if (col->guarantee) {
            report.add("rainbow_audit", false, details);
        } else {
            report.skip("rainbow_audit", details + " (no guarantee below m = 18)");
        }
    }
    Output sink(o.out, out);
    sink.get() << io::report_json(report).dump(2) << '\n';
    if (!report.passed()) {
        for (const CheckResult* f : report.failures()) err << "FAILED " << f->check << ": " << f->details << '\n';
        return kExitCheckFailed;
    }
    return kExitOk;
}

int cmd_rainbow(const Options& o, std::ostream& out) {
    Graph g = read_graph_file(o.graph);
    Graph h = read_graph_file(o.pattern);
    EdgeColoring col = o.coloring.empty() ? anti_rainbow_coloring(g, {.tight_mu = o.tight_mu}).coloring
                                          : io::coloring_from_json(io::read_json_file(o.coloring), g);
    auto found = rainbow_copy_search(g, col, h);
    Output sink(o.out, out);
    sink.get() << json{{"rainbow_found", found.has_value()},
                       {"embedding", found ? io::embedding_json(*found) : json(nullptr)}}
                      .dump(2)
               << '\n';
    return kExitOk;
}

Graph pattern_from_config(const json& cfg, const std::filesystem::path& base) {
    if (!cfg.contains("pattern")) return complete_graph(3);
    const json& p = cfg.at("pattern");
    if (p.is_string()) {
        const auto name = p.get<std::string>();
        if (name.size() > 1 && name[0] == 'K' && std::all_of(name.begin() + 1, name.end(), ::isdigit)) {
            return complete_graph(std::stoi(name.substr(1)));
        }
        std::filesystem::path path(name);
        return read_graph_file(path.is_absolute() ? path : base / path);
    }
    if (p.is_array()) {
        std::ostringstream text;
        for (const json& pair : p) {
            if (!pair.is_array() || pair.size() != 2) throw InputError("pattern edges must be [u, v] pairs");
            text << pair[0].get<long long>() << ' ' << pair[1].get<long long>() << '\n';
        }
        return parse_graph(text.str());
    }
    throw InputError("pattern must be \"K<n>\", an edge-list path or an array of pairs");
}

int cmd_experiment(const Options& o, std::ostream& out) {
    const json cfg = io::read_json_file(o.config);
    const std::string kind = cfg.value("kind", std::string("coloring"));
    TrialConfig base;
    try {
        base.n = cfg.at("n").get<int>();
        base.trials = o.trials.value_or(cfg.value("trials", 1));
        base.master_seed = o.seed.value_or(cfg.value("seed", std::uint64_t{0}));
    } catch (const json::exception& e) {
        throw InputError(std::string("experiment config: ") + e.what());
    }
    base.pattern = pattern_from_config(cfg, std::filesystem::path(o.config).parent_path());
    std::vector<Rational> ps;
    if (!cfg.contains("p")) throw InputError("experiment config: missing 'p'");
    for (const json& p : cfg.at("p").is_array() ? cfg.at("p") : json::array({cfg.at("p")})) {
        ps.push_back(p.is_string() ? Rational::parse(p.get<std::string>()) : Rational::parse(p.dump()));
    }

    json summary = json::array();
    std::vector<TrialRecord> all_records;
    if (kind == "triangle") {
        for (const TrialRate& rate : triangle_sweep(base, ps)) summary.push_back(io::trial_rate_json(rate, base.n));
    } else if (kind == "coloring") {
        for (const Rational& p : ps) {
            TrialConfig point = base;
            point.p = p;
            auto records = coloring_sweep(point);
            summary.push_back(io::sweep_summary_json(point, records));
            all_records.insert(all_records.end(), records.begin(), records.end());
        }
    } else {
        throw InputError("experiment config: unknown kind '" + kind + "'");
    }
    if (!o.csv.empty()) {
        std::ofstream csv(o.csv);
        if (!csv) throw InputError("cannot write " + o.csv);
        write_trials_csv(csv, all_records);
    }
    Output sink(o.out, out);
    sink.get() << summary.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degenerate forest decompositions and anti-rainbow edge colourings"};
    app.require_subcommand(1, 1);
    Options o;

    auto* density = app.add_subcommand("density", "maximum density m(G) with a witness");
    density->add_option("graph", o.graph, "edge-list file")->required();
    density->add_flag("--brute-force", o.brute_force, "exhaustive search (at most 16 vertices)");

    auto* two = app.add_subcommand("two-density", "maximum 2-density m2(H) with a witness");
    two->add_option("graph", o.graph, "edge-list file")->required();
    two->add_flag("--core", o.core, "also report the strictly 2-balanced core");

    auto* degeneracy = app.add_subcommand("degeneracy", "degeneracy and a min-degree peeling order");
    degeneracy->add_option("graph", o.graph, "edge-list file")->required();

    auto* decompose = app.add_subcommand("decompose", "layered forest decomposition as JSON");
    decompose->add_option("graph", o.graph, "edge-list file")->required();
    decompose->add_flag("--tight-mu", o.tight_mu, "peel each layer with its own maximum density");

    auto* color = app.add_subcommand("color", "proper edge colouring as JSON");
    color->add_option("graph", o.graph, "edge-list file")->required();
    color->add_flag("--tight-mu", o.tight_mu, "peel each layer with its own maximum density");
    color->add_flag("--guarantee-only", o.guarantee_only, "refuse graphs with m(G) < 18");

    auto* check = app.add_subcommand("check", "verify a decomposition and/or colouring against a graph");
    check->add_option("graph", o.graph, "edge-list file")->required();
    check->add_option("--decomposition", o.decomposition, "decomposition JSON");
    check->add_option("--coloring", o.coloring, "colouring JSON");
    check->add_option("--max-edges", o.max_edges, "also audit rainbow subgraphs up to this many edges");

    auto* rainbow = app.add_subcommand("rainbow", "search for a rainbow copy of a pattern");
    rainbow->add_option("graph", o.graph, "host edge-list file")->required();
    rainbow->add_option("pattern", o.pattern, "pattern edge-list file")->required();
    rainbow->add_option("--coloring", o.coloring, "colouring JSON (default: colour the host)");
    rainbow->add_flag("--tight-mu", o.tight_mu, "when colouring the host, peel with per-layer densities");

    auto* experiment = app.add_subcommand("experiment", "run a seeded G(n,p) sweep from a JSON config");
    experiment->add_option("config", o.config, "sweep configuration")->required();
    experiment->add_option("--seed", o.seed, "master seed (overrides the config)");
    experiment->add_option("--trials", o.trials, "trials per point (overrides the config)");
    experiment->add_option("--csv", o.csv, "write one CSV row per trial here");

    for (auto* sub : {density, two, degeneracy, decompose, color, check, rainbow, experiment}) {
        sub->add_option("--out", o.out, "write the result here instead of stdout");
    }
    for (auto* sub : {density, two, degeneracy}) sub->add_flag("--json", o.json_output, "JSON output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (density->parsed()) return cmd_density(o, out);
        if (two->parsed()) return cmd_two_density(o, out);
        if (degeneracy->parsed()) return cmd_degeneracy(o, out);
        if (decompose->parsed()) return cmd_decompose(o, out);
        if (color->parsed()) return cmd_color(o, out, err);
        if (check->parsed()) return cmd_check(o, out, err);
        if (rainbow->parsed()) return cmd_rainbow(o, out);
        if (experiment->parsed()) return cmd_experiment(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace antiramsey::cli
