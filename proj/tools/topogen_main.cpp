// Command-line front end: grows synthetic AS-level topologies (BA, IG, test,
// PFP), computes the full metrics suite on edge lists, and compares report
// batches against bundled or custom reference statistics.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topogen/config_io.hpp"
#include "topogen/edge_list.hpp"
#include "topogen/generate.hpp"
#include "topogen/metrics.hpp"
#include "topogen/references.hpp"
#include "topogen/report_io.hpp"
#include "topogen/version.hpp"

namespace fs = std::filesystem;
using namespace topogen;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_io = 2;
constexpr int exit_compare_failed = 3;

struct ModelFlags {
    std::string model = "pfp";
    std::optional<std::uint32_t> n, m, seed_nodes, seed_extra_edges;
    std::optional<double> p, q, alpha, delta;
    std::optional<std::uint64_t> seed;
    std::string config_file;
};

void add_model_flags(CLI::App* cmd, ModelFlags& f) {
    cmd->add_option("--model", f.model, "growth model: ba, ig, test, pfp")
        ->check(CLI::IsMember({"ba", "ig", "test", "pfp"}));
    cmd->add_option("--n", f.n, "target node count (default 11122)");
    cmd->add_option("--m", f.m, "ba: links per new node");
    cmd->add_option("--p", f.p, "branch probability p");
    cmd->add_option("--q", f.q, "pfp: branch probability q");
    cmd->add_option("--alpha", f.alpha, "test: fixed kernel exponent");
    cmd->add_option("--delta", f.delta, "pfp: positive-feedback strength");
    cmd->add_option("--seed", f.seed, "rng seed (runs use seed, seed+1, ...)");
    cmd->add_option("--seed-nodes", f.seed_nodes, "seed network size n0");
    cmd->add_option("--seed-extra-edges", f.seed_extra_edges, "extra random seed edges");
    cmd->add_option("--config", f.config_file,
                    "key=value config file or manifest; overrides flags");
}

GrowthConfig build_config(const ModelFlags& f) {
    auto model = parse_growth_model(f.model);
    if (!model) throw CLI::ValidationError("--model", "unknown model " + f.model);
    GrowthConfig c = GrowthConfig::defaults_for(*model);
    if (f.n) c.target_n = *f.n;
    if (f.m) c.m = *f.m;
    if (f.p) c.p = *f.p;
    if (f.q) c.q = *f.q;
    if (f.alpha) c.scheme.alpha = *f.alpha;
    if (f.delta) c.scheme.delta = *f.delta;
    if (f.seed) c.rng_seed = *f.seed;
    if (f.seed_nodes) c.seed_nodes = *f.seed_nodes;
    if (f.seed_extra_edges) c.seed_extra_edges = *f.seed_extra_edges;
    if (!f.config_file.empty()) c = load_config_file(f.config_file, c);
    c.validate();
    return c;
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Fn>
void write_file(const fs::path& path, Fn&& body) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    body(out);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

// ---------------------------------------------------------------- generate

int run_generate(const ModelFlags& flags, const std::string& out_dir, std::uint32_t runs) {
    const GrowthConfig base = build_config(flags);
    fs::create_directories(out_dir);
    for (std::uint32_t i = 0; i < runs; ++i) {
        const auto start = std::chrono::steady_clock::now();
        GrowthConfig config = base;
        config.rng_seed = base.rng_seed + i;
        GrowthResult result = grow(config);

        std::ostringstream name;
        name << to_string(config.model) << "-n" << config.target_n << "-s" << config.rng_seed;
        const fs::path edges_path = fs::path(out_dir) / (name.str() + ".edges");
        const fs::path manifest_path = fs::path(out_dir) / (name.str() + ".manifest.json");

        write_file(edges_path, [&](std::ostream& out) {
            write_edge_list(result.graph, out,
                            {"topogen " + std::string(version),
                             "config " + config_fingerprint(config),
                             "model=" + std::string(to_string(config.model)) +
                                 " n=" + std::to_string(config.target_n) +
                                 " seed=" + std::to_string(config.rng_seed)});
        });

        RunManifest manifest;
        manifest.command = "generate";
        manifest.config = config;
        manifest.outputs = {edges_path.string()};
        manifest.version = version;
        manifest.duration_seconds = elapsed_seconds(start);
        write_file(manifest_path, [&](std::ostream& out) { write_manifest(manifest, out); });

        std::cout << edges_path.string() << ": N=" << result.graph.node_count()
                  << " L=" << result.graph.edge_count()
                  << " skipped_links=" << result.stats.skipped_links << "\n";
    }
    return exit_ok;
}

// ----------------------------------------------------------------- analyze

struct SeriesFile {
    const char* suffix;
    const DistributionSeries* series;
};

int run_analyze(const std::vector<std::string>& inputs, const std::string& out_dir,
                bool lenient, bool use_id_map, FitWindow window, unsigned threads) {
    for (const auto& input : inputs) {
        const auto start = std::chrono::steady_clock::now();
        std::ifstream in(input);
        if (!in) throw std::runtime_error("cannot open " + input);

        Graph graph;
        std::vector<std::uint64_t> external_ids;
        std::uint64_t skipped = 0;
        if (use_id_map) {
            auto loaded = read_edge_list_mapped(in, {.lenient = lenient});
            graph = std::move(loaded.graph);
            external_ids = std::move(loaded.external_ids);
            skipped = loaded.skipped_lines;
        } else {
            auto loaded = read_edge_list(in, {.lenient = lenient});
            graph = std::move(loaded.graph);
            skipped = loaded.skipped_lines;
        }
        if (skipped > 0)
            std::cerr << input << ": skipped " << skipped << " self-loop/duplicate lines\n";

        AnalysisBundle bundle = analyze_graph(graph, window, threads);

        const fs::path in_path(input);
        const fs::path dir = out_dir.empty() ? in_path.parent_path() : fs::path(out_dir);
        if (!dir.empty()) fs::create_directories(dir);
        const std::string stem = in_path.stem().string();
        auto out_path = [&](const std::string& suffix) { return dir / (stem + suffix); };

        write_file(out_path(".report.json"), [&](std::ostream& out) {
            write_report(bundle.report, ReportFormat::json, out);
        });
        write_file(out_path(".report.csv"), [&](std::ostream& out) {
            write_report(bundle.report, ReportFormat::csv, out);
        });

        const SeriesFile series[] = {
            {".pdf.dat", &bundle.pdf},           {".ccdf.dat", &bundle.ccdf},
            {".rank.dat", &bundle.rank},         {".richclub.dat", &bundle.richclub},
            {".l_ccdf.dat", &bundle.l_ccdf},     {".l_vs_k.dat", &bundle.l_vs_k},
            {".kt_ccdf.dat", &bundle.kt_ccdf},   {".kq_ccdf.dat", &bundle.kq_ccdf},
            {".knn_ccdf.dat", &bundle.knn_ccdf}, {".knn_vs_k.dat", &bundle.knn_vs_k},
            {".cb_ccdf.dat", &bundle.cb_ccdf},   {".cb_vs_k.dat", &bundle.cb_vs_k},
        };
        std::vector<std::string> outputs{out_path(".report.json").string(),
                                         out_path(".report.csv").string()};
        for (const auto& s : series) {
            write_file(out_path(s.suffix),
                       [&](std::ostream& out) { write_series(*s.series, out); });
            outputs.push_back(out_path(s.suffix).string());
        }
        if (use_id_map) {
            write_file(out_path(".idmap.dat"),
                       [&](std::ostream& out) { write_id_map(external_ids, out); });
            outputs.push_back(out_path(".idmap.dat").string());
        }

        RunManifest manifest;
        manifest.command = "analyze";
        manifest.inputs = {input};
        manifest.outputs = outputs;
        manifest.version = version;
        manifest.duration_seconds = elapsed_seconds(start);
        write_file(out_path(".analyze.manifest.json"),
                   [&](std::ostream& out) { write_manifest(manifest, out); });

        std::cout << input << ": N=" << bundle.report.n << " L=" << bundle.report.links
                  << " gamma=" << format_double(bundle.report.gamma)
                  << " l*=" << format_double(bundle.report.l_star) << "\n";
    }
    return exit_ok;
}

// ----------------------------------------------------------------- compare

double report_field(const MetricsReport& r, std::size_t i) {
    switch (i) {
    case 0: return static_cast<double>(r.n);
    case 1: return static_cast<double>(r.links);
    case 2: return r.mean_degree;
    case 3: return r.gamma;
    case 4: return r.phi_1pct;
    case 5: return static_cast<double>(r.k_max);
    case 6: return r.p_k1;
    case 7: return r.p_k2;
    case 8: return r.p_k3;
    case 9: return r.l_star;
    case 10: return r.mean_kt;
    case 11: return static_cast<double>(r.max_kt);
    case 12: return r.mean_kq;
    case 13: return static_cast<double>(r.max_kq);
    case 14: return r.mean_knn;
    case 15: return r.mean_cb;
    default: return r.max_cb;
    }
}

int run_compare(std::vector<std::string> report_args, const std::string& reference,
                const std::string& tolerance_file) {
    // A directory argument expands to its *.report.json files.
    std::vector<std::string> paths;
    for (const auto& arg : report_args) {
        if (fs::is_directory(arg)) {
            std::vector<std::string> found;
            for (const auto& entry : fs::directory_iterator(arg)) {
                const auto name = entry.path().filename().string();
                if (name.size() > 12 && name.ends_with(".report.json"))
                    found.push_back(entry.path().string());
            }
            std::sort(found.begin(), found.end());
            paths.insert(paths.end(), found.begin(), found.end());
        } else {
            paths.push_back(arg);
        }
    }
    if (paths.empty()) throw std::runtime_error("no reports to compare");

    std::vector<MetricsReport> reports;
    for (const auto& path : paths) reports.push_back(read_report_file(path));

    MetricsReport reference_report;
    ToleranceTable tolerances;
    if (auto it = builtin_references().find(reference); it != builtin_references().end()) {
        reference_report = it->second;
        tolerances = builtin_tolerances().at(reference);
    } else if (fs::exists(reference)) {
        reference_report = read_report_file(reference);
    } else {
        throw std::runtime_error("unknown reference '" + reference +
                                 "' (builtin: as, pfp, ig, ba; or a report file path)");
    }
    if (!tolerance_file.empty()) {
        std::ifstream in(tolerance_file);
        if (!in) throw std::runtime_error("cannot open tolerances " + tolerance_file);
        tolerances = parse_tolerance_file(in);
    }

    std::printf("# %zu report(s) vs reference '%s'\n", reports.size(), reference.c_str());
    std::printf("%-12s %14s %14s %14s %9s\n", "metric", "mean", "reference", "deviation",
                "verdict");
    bool all_pass = true;
    for (std::size_t i = 0; i < report_keys.size(); ++i) {
        double sum = 0.0;
        for (const auto& r : reports) sum += report_field(r, i);
        const double mean = sum / static_cast<double>(reports.size());
        const double ref = report_field(reference_report, i);
        const double deviation = mean - ref;

        std::string verdict = "-";
        if (auto band = tolerances.find(report_keys[i]); band != tolerances.end()) {
            const bool pass = std::isfinite(mean) && band->second.contains(mean);
            verdict = pass ? "pass" : "FAIL";
            all_pass = all_pass && pass;
        }
        std::printf("%-12s %14.6g %14.6g %14.6g %9s\n", report_keys[i], mean, ref, deviation,
                    verdict.c_str());
    }
    std::printf("# overall: %s\n", all_pass ? "pass" : "FAIL");
    return all_pass ? exit_ok : exit_compare_failed;
}

// ------------------------------------------------------------------- sweep

std::vector<double> parse_value_list(const std::string& text, const std::string& flag) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        std::size_t used = 0;
        try {
            values.push_back(std::stod(token, &used));
        } catch (const std::exception&) {
            throw CLI::ValidationError(flag, "bad value '" + token + "'");
        }
        if (used != token.size())
            throw CLI::ValidationError(flag, "bad value '" + token + "'");
    }
    if (values.empty()) throw CLI::ValidationError(flag, "empty value list");
    return values;
}

int run_sweep(const ModelFlags& flags, const std::string& out_dir, std::uint32_t runs,
              unsigned threads, const std::map<std::string, std::string>& grid_flags) {
    const auto start = std::chrono::steady_clock::now();
    const GrowthConfig base = build_config(flags);

    // Cartesian grid over the comma-lists; absent axes stay at the base value.
    struct Axis {
        std::string name;
        std::vector<double> values;
    };
    std::vector<Axis> axes;
    for (const auto& [name, text] : grid_flags)
        axes.push_back({name, parse_value_list(text, "--" + name)});

    std::size_t points = 1;
    for (const auto& axis : axes) points *= axis.values.size();

    fs::create_directories(out_dir);
    const fs::path summary_path = fs::path(out_dir) / "summary.csv";
    std::ofstream summary(summary_path);
    if (!summary) throw std::runtime_error("cannot write " + summary_path.string());
    summary << "model,n,m,p,q,alpha,delta,seed,runs";
    for (const char* key : report_keys) summary << ',' << key;
    summary << '\n';

    for (std::size_t point = 0; point < points; ++point) {
        GrowthConfig config = base;
        std::size_t rest = point;
        for (const auto& axis : axes) {
            const double value = axis.values[rest % axis.values.size()];
            rest /= axis.values.size();
            if (axis.name == "delta") config.scheme.delta = value;
            else if (axis.name == "alpha") config.scheme.alpha = value;
            else if (axis.name == "p") config.p = value;
            else if (axis.name == "q") config.q = value;
            else if (axis.name == "m") config.m = static_cast<std::uint32_t>(value);
        }
        config.validate();

        std::vector<double> field_sum(report_keys.size(), 0.0);
        for (std::uint32_t i = 0; i < runs; ++i) {
            GrowthConfig run_config = config;
            run_config.rng_seed = config.rng_seed + i;
            GrowthResult result = grow(run_config);
            MetricsReport report = full_report(result.graph, {}, threads);
            for (std::size_t f = 0; f < report_keys.size(); ++f)
                field_sum[f] += report_field(report, f);
        }

        summary << to_string(config.model) << ',' << config.target_n << ',' << config.m << ','
                << format_double(config.p) << ',' << format_double(config.q) << ','
                << format_double(config.scheme.alpha) << ','
                << format_double(config.scheme.delta) << ',' << config.rng_seed << ',' << runs;
        for (double sum : field_sum)
            summary << ',' << format_double(sum / static_cast<double>(runs));
        summary << '\n';
        summary.flush();
        std::cout << "point " << (point + 1) << "/" << points << " done\n";
    }
    if (!summary) throw std::runtime_error("write failed for " + summary_path.string());

    RunManifest manifest;
    manifest.command = "sweep";
    manifest.config = base;
    manifest.outputs = {summary_path.string()};
    manifest.version = version;
    manifest.duration_seconds = elapsed_seconds(start);
    write_file(fs::path(out_dir) / "sweep.manifest.json",
               [&](std::ostream& out) { write_manifest(manifest, out); });
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"topogen: scale-free AS-topology generator and metrics toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(version));

    ModelFlags gen_flags;
    std::string gen_out = ".";
    std::uint32_t gen_runs = 1;
    auto* gen = app.add_subcommand("generate", "grow graphs and write edge lists");
    add_model_flags(gen, gen_flags);
    gen->add_option("--runs", gen_runs, "graphs to generate (seeds seed..seed+runs-1)");
    gen->add_option("--out", gen_out, "output directory");

    std::vector<std::string> analyze_inputs;
    std::string analyze_out;
    bool analyze_lenient = false, analyze_idmap = false;
    FitWindow analyze_window;
    unsigned analyze_threads = 0;
    auto* ana = app.add_subcommand("analyze", "compute the metrics suite for edge lists");
    ana->add_option("inputs", analyze_inputs, "edge list files")->required();
    ana->add_option("--out", analyze_out, "output directory (default: beside each input)");
    ana->add_flag("--lenient", analyze_lenient, "skip self-loop/duplicate lines instead of failing");
    ana->add_flag("--id-map", analyze_idmap,
                  "compact sparse external ids to dense ids (writes .idmap.dat)");
    ana->add_option("--fit-kmin", analyze_window.k_min, "power-law fit: lowest degree");
    ana->add_option("--fit-kupper", analyze_window.k_upper,
                    "power-law fit: highest degree (0 = auto)");
    ana->add_option("--threads", analyze_threads, "worker threads (0 = hardware)");

    std::vector<std::string> compare_inputs;
    std::string compare_reference = "as";
    std::string compare_tolerances;
    auto* cmp = app.add_subcommand("compare", "average reports and judge against a reference");
    cmp->add_option("reports", compare_inputs, "report files or a directory of *.report.json")
        ->required();
    cmp->add_option("--reference", compare_reference, "as, pfp, ig, ba, or a report file");
    cmp->add_option("--tolerances", compare_tolerances, "custom 'field lo hi' band file");

    // sweep reuses the generate flags, but the five tunables take comma
    // lists and span a cartesian grid
    ModelFlags sweep_flags;
    std::string sweep_out = "sweep";
    std::uint32_t sweep_runs = 1;
    unsigned sweep_threads = 0;
    std::map<std::string, std::string> sweep_grid;
    auto* swp = app.add_subcommand("sweep", "generate+analyze over a parameter grid");
    swp->add_option("--model", sweep_flags.model, "growth model: ba, ig, test, pfp")
        ->check(CLI::IsMember({"ba", "ig", "test", "pfp"}));
    swp->add_option("--n", sweep_flags.n, "target node count (default 11122)");
    swp->add_option("--seed", sweep_flags.seed, "rng seed (runs use seed, seed+1, ...)");
    swp->add_option("--seed-nodes", sweep_flags.seed_nodes, "seed network size n0");
    swp->add_option("--seed-extra-edges", sweep_flags.seed_extra_edges,
                    "extra random seed edges");
    swp->add_option("--config", sweep_flags.config_file,
                    "key=value config file or manifest; overrides flags");
    swp->add_option("--delta", sweep_grid["delta"], "delta value or comma list");
    swp->add_option("--alpha", sweep_grid["alpha"], "alpha value or comma list");
    swp->add_option("--p", sweep_grid["p"], "p value or comma list");
    swp->add_option("--q", sweep_grid["q"], "q value or comma list");
    swp->add_option("--m", sweep_grid["m"], "m value or comma list");
    swp->add_option("--runs", sweep_runs, "runs per grid point (averaged)");
    swp->add_option("--out", sweep_out, "output directory for summary.csv");
    swp->add_option("--threads", sweep_threads, "worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen) return run_generate(gen_flags, gen_out, gen_runs);
        if (*ana)
            return run_analyze(analyze_inputs, analyze_out, analyze_lenient, analyze_idmap,
                               analyze_window, analyze_threads);
        if (*cmp) return run_compare(compare_inputs, compare_reference, compare_tolerances);
        if (*swp) {
            std::map<std::string, std::string> grid;
            for (const auto& [name, text] : sweep_grid)
                if (!text.empty()) grid[name] = text;
            return run_sweep(sweep_flags, sweep_out, sweep_runs, sweep_threads, grid);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_io;
    }
    return exit_usage;
}
