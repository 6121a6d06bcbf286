#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "balance/cert_spectral.hpp"
#include "balance/cert_traversal.hpp"
#include "balance/edge_list.hpp"
#include "balance/generators.hpp"
#include "balance/json_io.hpp"
#include "balance/oracle.hpp"
#include "balance/parallel.hpp"
#include "balance/scoring.hpp"
#include "experiments.hpp"

namespace balance::cli {

namespace {

/// Bad parameter values detected after parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    Json parameters = Json::object();
    Json result;
    Json seeds = Json::array();
    int code = kSuccess;
    std::optional<std::string> raw;  // non-JSON payload (edge lists)
};

Graph load(const std::string& path) {
    if (path.empty()) throw UsageError("--input is required");
    if (path == "-") return read_edge_list(std::cin);
    return read_edge_list_file(path);
}

Rational parse_rational(const std::string& text, const char* flag) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
    std::vector<Vertex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            auto v = std::stoull(item, &used);
            if (used != item.size() || v > std::numeric_limits<Vertex>::max()) throw std::invalid_argument(item);
            out.push_back(Vertex(v));
        } catch (const std::exception&) {
            throw UsageError("--placement: '" + item + "' is not a vertex id");
        }
    }
    if (out.empty()) throw UsageError("--placement needs at least one vertex");
    return out;
}

void write_graph_to(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    write_edge_list(f, g);
}

std::string edge_list_text(const Graph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

void write_json_to(const std::string& path, const Json& j) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << j.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Facility-placement balancedness toolkit", kToolName};
    app.require_subcommand(1);
    // "-h" stays free for the reduction's --h budget.
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", kVersion);
    std::size_t threads = 0;
    app.add_option("--threads", threads, "Worker cap (0 = machine parallelism)");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph family as an edge list");
    gen->set_help_flag("--help", "Print this help message and exit");
    std::string family;
    std::size_t gen_n = 0, gen_h = 0, gen_bag = 0;
    double gen_d = 0;
    Seed gen_seed = 0;
    std::string gen_input, gen_output, gen_sidecar;
    gen->add_option("family", family, "gnd|path|cycle|complete|empty|star|thm3|fig3|reduce")
        ->required()
        ->check(CLI::IsMember({"gnd", "path", "cycle", "complete", "empty", "star", "thm3", "fig3", "reduce"}));
    gen->add_option("--n", gen_n, "Vertex count (leaf count for star)");
    gen->add_option("--d", gen_d, "Expected degree for gnd");
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--input", gen_input, "Dominating Set instance for reduce");
    gen->add_option("--h", gen_h, "Dominating set size for reduce");
    gen->add_option("--bag", gen_bag, "Bag size for reduce (default n^3)");
    gen->add_option("--output", gen_output, "Write the edge list here and a JSON report to stdout");
    gen->add_option("--sidecar", gen_sidecar, "Write the instance metadata JSON here");

    // score
    auto* score = app.add_subcommand("score", "Exact scores of one placement");
    std::string score_input, score_placement, score_z;
    score->add_option("--input", score_input, "Edge list path ('-' for stdin)")->required();
    score->add_option("--placement", score_placement, "Comma-separated facility vertices")->required();
    score->add_option("--z", score_z, "Also report z-balancedness (num/den)");

    // check-balanced
    auto* check = app.add_subcommand("check-balanced", "Exhaustive z-balancedness decision");
    std::string check_input, check_z = "0";
    std::size_t check_k = 0;
    std::uint64_t check_cap = kDefaultEnumerationCap;
    bool check_count = false;
    check->add_option("--input", check_input)->required();
    check->add_option("--k", check_k)->required();
    check->add_option("--z", check_z, "num/den");
    check->add_option("--cap", check_cap, "Maximum placements to enumerate");
    check->add_flag("--count", check_count, "Also count every violating placement");

    // unbalanced
    auto* unbal = app.add_subcommand("unbalanced", "Does some placement leave a player below s?");
    std::string unbal_input, unbal_s;
    std::size_t unbal_k = 0;
    std::uint64_t unbal_cap = kDefaultEnumerationCap;
    unbal->add_option("--input", unbal_input)->required();
    unbal->add_option("--k", unbal_k)->required();
    unbal->add_option("--s", unbal_s, "num/den")->required();
    unbal->add_option("--cap", unbal_cap);

    // certify-traversal
    auto* trav = app.add_subcommand("certify-traversal", "Neighborhood-table balancedness certificate");
    std::string trav_input, trav_delta;
    std::size_t trav_k = 0;
    trav->add_option("--input", trav_input)->required();
    trav->add_option("--k", trav_k)->required();
    trav->add_option("--delta", trav_delta, "num/den")->required();

    // certify-spectral
    auto* spec = app.add_subcommand("certify-spectral", "Probabilistic spectral certificate");
    std::string spec_input;
    Seed spec_seed = 0;
    std::size_t spec_trials = 0;
    double spec_cpow = kDefaultPowerConstant;
    spec->add_option("--input", spec_input)->required();
    spec->add_option("--seed", spec_seed)->required();
    spec->add_option("--trials", spec_trials, "Estimate the acceptance probability over this many runs");
    spec->add_option("--c-pow", spec_cpow, "Iterations t = ceil(c_pow ln n)");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Dominating Set to Unbalancedness reduction");
    reduce->set_help_flag("--help", "Print this help message and exit");
    std::string reduce_input, reduce_output;
    std::size_t reduce_h = 0, reduce_bag = 0;
    reduce->add_option("--input", reduce_input)->required();
    reduce->add_option("--h", reduce_h)->required();
    reduce->add_option("--bag", reduce_bag, "Bag size (default n^3)");
    reduce->add_option("--output", reduce_output, "Write the reduced edge list here");

    // experiment
    auto* exper = app.add_subcommand("experiment", "Multi-seed batch experiments");
    std::string exp_name, exp_delta = "1/10";
    std::size_t exp_n = 0, exp_k = 2, exp_graphs = 0, exp_placements = 100, exp_samples = 50, exp_trials = 0;
    double exp_d = 0, exp_exponent = 0.6, exp_fraction = 0.1;
    Seed exp_seed = 1;
    exper->add_option("name", exp_name)->required()->check(CLI::IsMember(experiments::names()));
    exper->add_option("--n", exp_n);
    exper->add_option("--d", exp_d, "Expected degree (default n^exponent)");
    exper->add_option("--exponent", exp_exponent);
    exper->add_option("--k", exp_k);
    exper->add_option("--delta", exp_delta);
    exper->add_option("--graphs,--seeds", exp_graphs, "Number of sampled graphs");
    exper->add_option("--placements", exp_placements);
    exper->add_option("--samples", exp_samples);
    exper->add_option("--fraction", exp_fraction);
    exper->add_option("--spectral-trials", exp_trials);
    exper->add_option("--seed", exp_seed, "Base seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kError;
    }
    set_max_threads(threads);

    std::string subcommand = app.get_subcommands().front()->get_name();
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        if (subcommand == "gen") {
            o.parameters = Json{{"family", family}};
            Graph g;
            Json meta = Json::object();
            auto need_n = [&] {
                if (gen_n == 0) throw UsageError("gen " + family + " needs --n >= 1");
                o.parameters["n"] = gen_n;
            };
            if (family == "gnd") {
                need_n();
                o.parameters["d"] = gen_d;
                o.parameters["seed"] = gen_seed;
                o.seeds.push_back(gen_seed);
                if (gen_n < 2 || gen_d < 0 || gen_d > double(gen_n - 1)) {
                    throw UsageError("gen gnd needs n >= 2 and 0 <= d <= n - 1");
                }
                g = sample_gnd(gen_n, gen_d, gen_seed);
            } else if (family == "path" || family == "cycle" || family == "complete" || family == "empty" ||
                       family == "star") {
                need_n();
                if (family == "cycle" && gen_n < 3) throw UsageError("gen cycle needs --n >= 3");
                g = family == "path"       ? path_graph(gen_n)
                    : family == "cycle"    ? cycle_graph(gen_n)
                    : family == "complete" ? complete_graph(gen_n)
                    : family == "empty"    ? empty_graph(gen_n)
                                           : star_graph(gen_n);
            } else if (family == "thm3") {
                need_n();
                o.parameters["seed"] = gen_seed;
                auto inst = unbalanced_expander(gen_n, gen_seed);
                o.seeds.push_back(inst.seed_used);
                meta = Json{{"root", inst.root},     {"originals", inst.originals}, {"hubs", inst.hubs},
                            {"seed_used", inst.seed_used}, {"retries", inst.retries}};
                g = std::move(inst.graph);
            } else if (family == "fig3") {
                auto lg = figure3_graph();
                meta = Json{{"labels", lg.labels}};
                g = std::move(lg.graph);
            } else {  // reduce
                auto base = load(gen_input);
                if (gen_h == 0) throw UsageError("gen reduce needs --h >= 1");
                const std::size_t n = base.num_vertices();
                const std::size_t bag = gen_bag ? gen_bag : n * n * n;
                o.parameters.update(Json{{"input", gen_input}, {"h", gen_h}, {"bag", bag}});
                auto inst = dominating_set_reduction(base, gen_h, bag);
                meta = to_json(inst);
                g = std::move(inst.graph);
            }
            if (!gen_sidecar.empty()) write_json_to(gen_sidecar, meta);
            if (gen_output.empty()) {
                o.raw = edge_list_text(g);
            } else {
                write_graph_to(gen_output, g);
                o.parameters["output"] = gen_output;
                o.result = Json{{"vertices", g.num_vertices()}, {"edges", g.num_edges()}, {"metadata", meta}};
            }
        } else if (subcommand == "score") {
            auto g = load(score_input);
            Placement p(parse_vertex_list(score_placement));
            p.check_bounds(g.num_vertices());
            o.parameters = Json{{"input", score_input}, {"placement", to_json(p)}};
            auto report = scores(g, p);
            if (!score_z.empty()) {
                auto z = parse_rational(score_z, "--z");
                if (z < Rational(0)) throw UsageError("--z must be non-negative");
                report = with_verdict(std::move(report), z);
                o.parameters["z"] = to_json(z);
            }
            o.result = to_json(report);
        } else if (subcommand == "check-balanced") {
            auto g = load(check_input);
            auto z = parse_rational(check_z, "--z");
            if (z < Rational(0)) throw UsageError("--z must be non-negative");
            if (check_k < 1 || check_k > g.num_vertices()) throw UsageError("--k must be in 1..n");
            o.parameters = Json{{"input", check_input}, {"k", check_k}, {"z", to_json(z)}, {"cap", check_cap}};
            auto verdict = is_graph_z_balanced(g, check_k, z, check_cap);
            o.result = to_json(verdict);
            if (check_count) o.result["counts"] = to_json(count_unbalanced_placements(g, check_k, z, check_cap));
            o.code = verdict.balanced ? kSuccess : kNegative;
        } else if (subcommand == "unbalanced") {
            auto g = load(unbal_input);
            auto s = parse_rational(unbal_s, "--s");
            if (unbal_k < 1 || unbal_k > g.num_vertices()) throw UsageError("--k must be in 1..n");
            o.parameters = Json{{"input", unbal_input}, {"k", unbal_k}, {"s", to_json(s)}, {"cap", unbal_cap}};
            auto answer = unbalancedness_decision(g, unbal_k, s, unbal_cap);
            o.result = to_json(answer);
            o.code = answer.answer ? kSuccess : kNegative;
        } else if (subcommand == "certify-traversal") {
            auto g = load(trav_input);
            auto delta = parse_rational(trav_delta, "--delta");
            if (delta <= Rational(0)) throw UsageError("--delta must be positive");
            if (trav_k < 1 || trav_k > g.num_vertices()) throw UsageError("--k must be in 1..n");
            o.parameters = Json{{"input", trav_input}, {"k", trav_k}, {"delta", to_json(delta)}};
            auto cert = traversal_certificate(g, trav_k, delta);
            o.result = to_json(cert);
            o.code = cert.accept ? kSuccess : kNegative;
        } else if (subcommand == "certify-spectral") {
            auto g = load(spec_input);
            if (g.num_vertices() == 0) throw UsageError("spectral certificate needs a nonempty graph");
            o.parameters = Json{{"input", spec_input}, {"seed", spec_seed}, {"c_pow", spec_cpow}};
            o.seeds.push_back(spec_seed);
            SpectralOptions options;
            options.c_pow = spec_cpow;
            if (spec_trials > 0) {
                o.parameters["trials"] = spec_trials;
                auto est = estimate_acceptance(g, spec_trials, spec_seed, options);
                o.result = to_json(est);
                o.code = est.exceeds_threshold ? kSuccess : kNegative;
            } else {
                auto cert = spectral_certificate(g, spec_seed, options);
                o.result = to_json(cert);
                o.code = cert.accept ? kSuccess : kNegative;
            }
        } else if (subcommand == "reduce") {
            auto base = load(reduce_input);
            if (reduce_h == 0) throw UsageError("--h must be >= 1");
            const std::size_t n = base.num_vertices();
            const std::size_t bag = reduce_bag ? reduce_bag : n * n * n;
            o.parameters = Json{{"input", reduce_input}, {"h", reduce_h}, {"bag", bag}};
            auto inst = dominating_set_reduction(base, reduce_h, bag);
            if (!reduce_output.empty()) {
                write_graph_to(reduce_output, inst.graph);
                o.parameters["output"] = reduce_output;
            }
            o.result = to_json(inst);
        } else if (subcommand == "experiment") {
            o.parameters = Json{{"name", exp_name},         {"n", exp_n},
                                {"d", exp_d},               {"exponent", exp_exponent},
                                {"k", exp_k},               {"delta", exp_delta},
                                {"graphs", exp_graphs},     {"placements", exp_placements},
                                {"samples", exp_samples},   {"fraction", exp_fraction},
                                {"spectral_trials", exp_trials}, {"seed", exp_seed}};
            o.seeds.push_back(exp_seed);
            if (exp_name == "thm1-score-gap") {
                experiments::ScoreGapParams p;
                p.n = exp_n ? exp_n : p.n;
                p.d = exp_d;
                p.exponent = exp_exponent;
                p.k = exp_k;
                p.graphs = exp_graphs ? exp_graphs : p.graphs;
                p.placements = exp_placements;
                p.fraction = exp_fraction;
                p.seed = exp_seed;
                if (p.k < 1 || p.k > p.n) throw UsageError("--k must be in 1..n");
                o.result = experiments::score_gap(p);
            } else if (exp_name == "thm3-n2-profile") {
                experiments::ExpanderProfileParams p;
                p.n = exp_n ? exp_n : p.n;
                p.samples = exp_samples;
                p.seed = exp_seed;
                o.result = experiments::expander_profile(p);
            } else if (exp_name == "spectral-gap") {
                experiments::SpectralGapParams p;
                p.n = exp_n ? exp_n : p.n;
                p.d = exp_d > 0 ? exp_d : p.d;
                p.graphs = exp_graphs ? exp_graphs : p.graphs;
                p.seed = exp_seed;
                o.result = experiments::spectral_gap(p);
            } else {
                experiments::CertRateParams p;
                p.n = exp_n ? exp_n : p.n;
                p.d = exp_d;
                p.exponent = exp_exponent;
                p.k = exp_k;
                p.delta = parse_rational(exp_delta, "--delta");
                p.graphs = exp_graphs ? exp_graphs : p.graphs;
                p.spectral_trials = exp_trials;
                p.seed = exp_seed;
                if (p.delta <= Rational(0)) throw UsageError("--delta must be positive");
                o.result = experiments::cert_rates(p);
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        Json error{{"message", e.what()}};
        if (auto* el = dynamic_cast<const EdgeListError*>(&e); el && el->line() != 0) error["line"] = el->line();
        Json doc{{"schema", kReportSchema}, {"tool", kToolName}, {"version", kVersion},
                 {"subcommand", subcommand}, {"error", error}};
        out << doc.dump(2) << '\n';
        return kError;
    }

    if (o.raw) {
        out << *o.raw;
        return o.code;
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    Json doc{{"schema", kReportSchema}, {"tool", kToolName},   {"version", kVersion},
             {"subcommand", subcommand}, {"parameters", o.parameters}, {"result", o.result},
             {"elapsed_ms", elapsed},   {"seeds", o.seeds}};
    out << doc.dump(2) << '\n';
    return o.code;
}

}  // namespace balance::cli
