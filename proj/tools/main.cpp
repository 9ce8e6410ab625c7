// corekit command line: urn sampling, random cores over kernel families,
// exact censuses with counting-identity reports, graph samplers, and the
// scaling-law harness.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "corekit/census.hpp"
#include "corekit/corelab.hpp"
#include "corekit/decompose.hpp"
#include "corekit/experiments.hpp"
#include "corekit/planarity.hpp"
#include "corekit/polya.hpp"
#include "corekit/rng.hpp"
#include "corekit/sampler.hpp"

using nlohmann::json;

namespace {

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

corekit::Multigraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return corekit::Multigraph::from_text(ss.str());
}

int cmd_urn(long long colors, long long draws, long long first, long long trials,
            std::uint64_t seed, const std::string& format, const std::string& out_path) {
    auto stats = corekit::urn_minmax(colors, draws, first, trials, seed);
    if (format == "csv") {
        std::ostringstream os;
        os << "trial,min,max\n";
        for (std::size_t t = 0; t < stats.mins.size(); ++t)
            os << t << ',' << stats.mins[t] << ',' << stats.maxs[t] << '\n';
        write_output(out_path, os.str());
        return 0;
    }
    json j;
    j["colors"] = colors;
    j["draws"] = draws;
    j["first"] = first;
    j["trials"] = trials;
    j["seed"] = seed;
    j["version"] = corekit::tool_version();
    j["min"] = {{"median", stats.min_median()},
                {"q10", stats.min_quantile(0.1)},
                {"q90", stats.min_quantile(0.9)}};
    j["max"] = {{"median", stats.max_median()},
                {"q10", stats.max_quantile(0.1)},
                {"q90", stats.max_quantile(0.9)}};
    write_output(out_path, j.dump(2) + "\n");
    return 0;
}

int cmd_core(const std::string& kernel_spec, long long subdiv, long long trials,
             std::uint64_t seed, const std::string& stats_csv, const std::string& out_path) {
    corekit::Multigraph kernel;
    if (kernel_spec.rfind("file:", 0) == 0) {
        kernel = load_graph(kernel_spec.substr(5));
    } else {
        kernel = corekit::kernel_family(corekit::KernelFamilySpec::parse(kernel_spec));
    }

    std::vector<std::string> stats;
    {
        std::stringstream ss(stats_csv);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) stats.push_back(item);
    }

    json j;
    j["kernel"] = kernel_spec;
    j["kernel_vertices"] = kernel.vertex_count();
    j["kernel_edges"] = kernel.edge_count();
    j["kernel_loops"] = kernel.loop_count();
    j["subdiv"] = subdiv;
    j["trials"] = trials;
    j["seed"] = seed;
    j["version"] = corekit::tool_version();
    json jt = json::array();
    for (long long t = 0; t < trials; ++t) {
        auto r = corekit::random_multicore(kernel, subdiv, corekit::derive_seed(seed, t));
        json row;
        row["trial"] = t;
        row["simple"] = r.simple;
        row["two_simple"] = r.two_simple;
        for (const auto& stat : stats) {
            if (stat == "girth") {
                auto g = corekit::girth_via_kernel(kernel, r.counts);
                row["girth"] = g ? json(*g) : json(nullptr);
            } else if (stat == "circ") {
                auto c = corekit::circumference_via_kernel(kernel, r.counts);
                row["circ"] = c ? json(*c) : json(nullptr);
            } else if (stat == "maxloop") {
                row["maxloop"] = kernel.loop_count() > 0
                                     ? json(corekit::max_loop_cycle(kernel, r.counts))
                                     : json(nullptr);
            } else if (stat == "blocks") {
                auto bs = corekit::blocks(r.core);
                row["blocks"] = bs.sizes;
            } else {
                throw std::runtime_error("unknown stat: " + stat);
            }
        }
        jt.push_back(std::move(row));
    }
    j["trials_data"] = std::move(jt);
    write_output(out_path, j.dump(2) + "\n");
    return 0;
}

int cmd_census(int vertices, const std::string& filter_csv, bool identities,
               const std::string& out_path, int threads) {
    auto filter = corekit::CensusFilter::parse(filter_csv);
    auto c = corekit::census(vertices, filter, threads);
    json j;
    j["vertices"] = c.two_n;
    j["filter"] = filter.to_string();
    j["total_weight"] = c.total_weight.to_string();
    j["accepted_pairings"] = c.accepted_pairings;
    j["total_pairings"] = c.total_pairings;
    j["distinct_graphs"] = c.records.size();
    j["version"] = corekit::tool_version();
    json graphs = json::array();
    for (const auto& rec : c.records) {
        json g;
        json edges = json::array();
        for (auto [u, v] : rec.edges) edges.push_back({u, v});
        g["edges"] = std::move(edges);
        g["weight"] = rec.graph_weight.to_string();
        g["pairings"] = rec.pairings;
        g["connected"] = rec.connected;
        g["planar"] = rec.planar;
        graphs.push_back(std::move(g));
    }
    j["graphs"] = std::move(graphs);
    if (identities) {
        if (vertices >= 4) {
            auto loop = corekit::verify_loop_identity(vertices, threads);
            j["loop_identity"] = {{"lhs", loop.lhs.to_string()},
                                  {"rhs", loop.rhs.to_string()},
                                  {"loop_weight", loop.loop_weight.to_string()},
                                  {"a_n", loop.a_n.to_string()},
                                  {"a_n_minus_1", loop.a_n_minus_1.to_string()},
                                  {"equal", loop.equal}};
            auto bridge = corekit::verify_bridge_identity(vertices, 1, threads);
            j["bridge_identity"] = {{"f", bridge.f},
                                    {"lhs", bridge.lhs.to_string()},
                                    {"rhs", bridge.rhs.to_string()},
                                    {"equal", bridge.equal}};
            if (!loop.equal || !bridge.equal) {
                write_output(out_path, j.dump(2) + "\n");
                return 1;
            }
        }
    }
    write_output(out_path, j.dump(2) + "\n");
    return 0;
}

int cmd_sample(const std::string& model, long long n, long long m, int two_n,
               const std::string& filter_csv, std::uint64_t seed, long long max_tries,
               const std::string& out_path) {
    if (model == "gnm") {
        auto g = corekit::gnm_sample(n, m, seed);
        write_output(out_path, g.to_text());
        return 0;
    }
    if (model == "planar") {
        auto r = corekit::planar_rejection_sample(n, m, seed, max_tries);
        if (r.exhausted()) {
            std::cerr << "planar rejection exhausted after " << r.tries << " tries\n";
            return 1;
        }
        std::cerr << "accepted after " << r.tries << " tries\n";
        write_output(out_path, r.graph->to_text());
        return 0;
    }
    if (model == "cubic") {
        auto filter = corekit::CensusFilter::parse(filter_csv);
        auto r = corekit::cubic_config_sample(two_n, filter, seed, max_tries);
        std::cerr << "accepted after " << r.tries << " tries\n";
        write_output(out_path, r.graph.to_text());
        return 0;
    }
    std::cerr << "unknown model: " << model << "\n";
    return 2;
}

json fit_to_json(const corekit::FitResult& fit) {
    json points = json::array();
    for (auto [x, y] : fit.points) points.push_back({x, y});
    return {{"slope", fit.slope},
            {"intercept", fit.intercept},
            {"stderr", fit.stderr_slope},
            {"points", points}};
}

int cmd_scaling(const std::string& config_path, const std::string& csv_path,
                const std::string& summary_path) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config: " + config_path);
    json cfg = json::parse(in);

    bool windows_ok = true;
    json summary;
    summary["version"] = corekit::tool_version();
    summary["config"] = cfg;
    std::string csv;

    std::string mode = cfg.at("mode");
    if (mode == "core") {
        corekit::CoreScalingConfig c;
        c.family = corekit::KernelFamilySpec::parse(cfg.at("family")).family;
        c.stat = cfg.at("stat");
        for (const auto& g : cfg.at("grid"))
            c.grid.emplace_back((int)g.at("size"), (long long)g.at("k"));
        c.trials = cfg.value("trials", 200);
        c.seed = cfg.value("seed", 1);
        c.threads = cfg.value("threads", 0);
        auto report = corekit::run_core_scaling(c);
        csv = report.to_csv();
        json pts = json::array();
        for (const auto& p : report.points)
            pts.push_back({{"size", p.size},
                           {"k", p.k},
                           {"kernel_edges", p.kernel_edges},
                           {"kernel_loops", p.kernel_loops},
                           {"median", p.median}});
        summary["points"] = std::move(pts);
        if (cfg.contains("fit")) {
            const auto& f = cfg.at("fit");
            std::string axis = f.value("axis", "k");
            auto fit = corekit::fit_exponent(axis == "k" ? report.medians_vs_k()
                                                         : report.medians_vs_edges());
            summary["fit"] = fit_to_json(fit);
            if (f.contains("expect")) {
                double expect = f.at("expect"), tol = f.value("tol", 0.15);
                bool ok = std::abs(fit.slope - expect) <= tol;
                summary["fit"]["window_ok"] = ok;
                windows_ok = windows_ok && ok;
            }
        }
    } else if (mode == "planar") {
        corekit::RegimeSpec spec;
        spec.regime = cfg.value("regime", "critical");
        spec.beta = cfg.value("beta", 0.75);
        for (const auto& n : cfg.at("n_grid")) spec.n_grid.push_back((long long)n);
        spec.trials = cfg.value("trials", 300);
        spec.seed = cfg.value("seed", 1);
        spec.max_tries_per_sample = cfg.value("max_tries", 5000);
        auto report = corekit::run_planar_scaling(spec, cfg.value("threads", 0));
        csv = report.to_csv();
        summary["regime"] = {{"regime", spec.regime},
                             {"beta", spec.beta},
                             {"n_grid", spec.n_grid},
                             {"trials", spec.trials},
                             {"seed", spec.seed},
                             {"max_tries", spec.max_tries_per_sample}};
        summary["starved"] = report.starved;
        json pts = json::array();
        for (const auto& p : report.points) {
            json jp = {{"n", p.n},
                       {"m", p.m},
                       {"accepted", p.accepted},
                       {"attempts", p.attempts},
                       {"tree_fraction", p.tree_fraction}};
            if (p.median_l1_circ) jp["median_l1_circ"] = *p.median_l1_circ;
            pts.push_back(std::move(jp));
        }
        summary["points"] = std::move(pts);
        if (report.starved) windows_ok = false;
        if (report.l1_circ_fit) summary["l1_circ_fit"] = fit_to_json(*report.l1_circ_fit);
        if (cfg.contains("expect_circ_slope")) {
            double expect = cfg.at("expect_circ_slope");
            double tol = cfg.value("slope_tol", 0.15);
            bool ok = report.l1_circ_fit &&
                      std::abs(report.l1_circ_fit->slope - expect) <= tol;
            summary["circ_slope_window_ok"] = ok;
            windows_ok = windows_ok && ok;
        }
        if (cfg.contains("tree_fraction_window")) {
            double lo = cfg.at("tree_fraction_window")[0];
            double hi = cfg.at("tree_fraction_window")[1];
            bool ok = true;
            for (const auto& p : report.points)
                ok = ok && p.tree_fraction >= lo && p.tree_fraction <= hi;
            summary["tree_fraction_window_ok"] = ok;
            windows_ok = windows_ok && ok;
        }
    } else {
        throw std::runtime_error("unknown scaling mode: " + mode);
    }

    summary["windows_ok"] = windows_ok;
    if (!csv_path.empty()) write_output(csv_path, csv);
    write_output(summary_path, summary.dump(2) + "\n");
    return windows_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"random planar graph structure toolkit"};
    app.set_version_flag("--version", corekit::tool_version());
    app.require_subcommand(1);

    // urn
    long long colors = 3, draws = 10, first = 0, trials = 1000;
    std::uint64_t seed = 1;
    std::string format = "json", out_path;
    auto* urn = app.add_subcommand("urn", "Polya urn min/max statistics");
    urn->add_option("--colors", colors, "number of colours N")->required();
    urn->add_option("--draws", draws, "number of draws k")->required();
    urn->add_option("--first", first, "take min/max over the first f colours (default N)");
    urn->add_option("--trials", trials, "Monte Carlo trials");
    urn->add_option("--seed", seed, "RNG seed");
    urn->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    urn->add_option("--out", out_path, "output path (default stdout)");

    // core
    std::string kernel_spec = "necklace:3", stats_csv = "girth,maxloop";
    long long subdiv = 100;
    auto* core = app.add_subcommand("core", "random cores over a kernel");
    core->add_option("--kernel", kernel_spec,
                     "necklace:L | chain:b | theta[:p] | figure-eight[:l] | file:PATH");
    core->add_option("--subdiv", subdiv, "subdivision count k")->required();
    core->add_option("--trials", trials, "number of cores to draw");
    core->add_option("--seed", seed, "RNG seed");
    core->add_option("--stats", stats_csv, "comma list of girth,circ,maxloop,blocks");
    core->add_option("--out", out_path, "output path (default stdout)");

    // census
    int vertices = 4, threads = 0;
    std::string filter_csv, report_kind;
    auto* census_cmd = app.add_subcommand("census", "exact weighted cubic census");
    census_cmd->add_option("--vertices", vertices, "vertex count 2n (2, 4, or 6)")->required();
    census_cmd->add_option("--filter", filter_csv, "connected,planar");
    census_cmd->add_option("--report", report_kind, "verify the counting identities")
        ->expected(0, 1)
        ->check(CLI::IsMember({"identities", ""}));
    census_cmd->add_option("--threads", threads, "worker threads (0 = auto)");
    census_cmd->add_option("--out", out_path, "output path (default stdout)");

    // sample
    std::string model = "gnm";
    long long n = 10, m = 5, max_tries = 1000;
    int two_n = 4;
    auto* sample = app.add_subcommand("sample", "graph samplers");
    sample->add_option("--model", model, "gnm | planar | cubic")->required();
    sample->add_option("--n", n, "vertex count (gnm/planar)");
    sample->add_option("--m", m, "edge count (gnm/planar)");
    sample->add_option("--vertices", two_n, "vertex count 2n (cubic)");
    sample->add_option("--filter", filter_csv, "connected,planar (cubic)");
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("--max-tries", max_tries, "rejection budget");
    sample->add_option("--out", out_path, "output path (default stdout)");

    // scaling
    std::string config_path, csv_path, summary_path;
    auto* scaling = app.add_subcommand("scaling", "scaling-law experiment harness");
    scaling->add_option("--config", config_path, "JSON config file")->required();
    scaling->add_option("--csv", csv_path, "per-trial CSV output path");
    scaling->add_option("--summary", summary_path, "summary JSON path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (urn->parsed())
            return cmd_urn(colors, draws, first > 0 ? first : colors, trials, seed, format,
                           out_path);
        if (core->parsed())
            return cmd_core(kernel_spec, subdiv, trials, seed, stats_csv, out_path);
        if (census_cmd->parsed())
            return cmd_census(vertices, filter_csv, census_cmd->count("--report") > 0, out_path,
                              threads);
        if (sample->parsed())
            return cmd_sample(model, n, m, two_n, filter_csv, seed, max_tries, out_path);
        if (scaling->parsed()) return cmd_scaling(config_path, csv_path, summary_path);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 0;
}
