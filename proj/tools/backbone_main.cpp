// backbone: sparsify graphs by edge scoring and evaluate what survives.
//
// Subcommands:
//   sweep      score/filter across methods x ratios, write CSV + JSON reports
//   correlate  Spearman matrix between scoring methods
//   seir       epidemic curves on the original vs one sparsified graph
//   generate   write a planted partition graph + ground truth

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "backbone/correlation.hpp"
#include "backbone/errors.hpp"
#include "backbone/filtering.hpp"
#include "backbone/generators.hpp"
#include "backbone/graph_io.hpp"
#include "backbone/report.hpp"
#include "backbone/seir.hpp"
#include "backbone/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
    std::string input_path;
    std::string ground_truth_path;
    std::string generate_spec;
    std::uint64_t seed = 1;
    int workers = 0;
};

struct LoadedGraph {
    backbone::Graph graph;
    std::optional<backbone::Partition> ground_truth;
};

// "k=10,size=100,pin=0.1,pout=0.01" -> spec; the seed comes from --seed.
backbone::PlantedPartitionSpec parse_generate_spec(const std::string& text,
                                                   std::uint64_t seed) {
    backbone::PlantedPartitionSpec spec;
    spec.seed = seed;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw backbone::InvalidParameterError("bad generate spec item: " + item);
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        try {
            if (key == "k")
                spec.communities = static_cast<std::uint32_t>(std::stoul(value));
            else if (key == "size")
                spec.nodes_per_community = static_cast<std::uint32_t>(std::stoul(value));
            else if (key == "pin")
                spec.p_in = std::stod(value);
            else if (key == "pout")
                spec.p_out = std::stod(value);
            else
                throw backbone::InvalidParameterError("unknown generate spec key: " + key);
        } catch (const std::logic_error&) {
            throw backbone::InvalidParameterError("bad generate spec value: " + item);
        }
    }
    return spec;
}

LoadedGraph load_input(const InputOptions& in) {
    LoadedGraph out;
    if (!in.generate_spec.empty()) {
        auto generated =
            backbone::generate_planted_partition(parse_generate_spec(in.generate_spec, in.seed));
        if (generated.low_degree_warning)
            std::cerr << "warning: expected average degree below 1\n";
        out.graph = std::move(generated.graph);
        out.ground_truth = std::move(generated.ground_truth);
        return out;
    }
    auto loaded = backbone::load_edge_list(in.input_path);
    if (loaded.stats.self_loops_removed || loaded.stats.duplicates_merged)
        std::cerr << "note: dropped " << loaded.stats.self_loops_removed
                  << " self-loops, merged " << loaded.stats.duplicates_merged
                  << " duplicate edges\n";
    out.graph = std::move(loaded.graph);
    if (!in.ground_truth_path.empty())
        out.ground_truth =
            backbone::load_ground_truth(in.ground_truth_path, loaded.compact_ids);
    return out;
}

// Either "0.1:1.0:0.05" (inclusive, within rounding) or "0.2,0.5,0.9".
std::vector<double> parse_ratios(const std::string& text) {
    std::vector<double> out;
    const auto parse_num = [](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::logic_error&) {
            throw backbone::InvalidParameterError("bad ratio: " + s);
        }
        if (used != s.size()) throw backbone::InvalidParameterError("bad ratio: " + s);
        return v;
    };
    if (text.find(':') != std::string::npos) {
        std::stringstream ss(text);
        std::string a, b, step;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') ||
            !std::getline(ss, step, ':'))
            throw backbone::InvalidParameterError("range ratios need start:stop:step");
        const double start = parse_num(a), stop = parse_num(b), inc = parse_num(step);
        if (inc <= 0.0) throw backbone::InvalidParameterError("ratio step must be positive");
        for (int i = 0;; ++i) {
            const double r = start + i * inc;
            if (r > stop + 1e-9) break;
            out.push_back(r);
        }
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(parse_num(item));
    }
    if (out.empty()) throw backbone::InvalidParameterError("no ratios given");
    return out;
}

std::vector<backbone::MethodSpec> parse_methods(const std::string& text) {
    std::vector<backbone::MethodSpec> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(backbone::MethodSpec::parse(item));
    if (out.empty()) throw backbone::InvalidParameterError("no methods given");
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw backbone::IoError("cannot open " + path + " for writing");
    out << content;
    if (!out) throw backbone::IoError("write failure on " + path);
}

int env_workers() {
    if (const char* env = std::getenv("BACKBONE_WORKERS")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::logic_error&) {
            std::cerr << "warning: ignoring non-numeric BACKBONE_WORKERS\n";
        }
    }
    return 0;
}

void add_input_options(CLI::App* cmd, InputOptions& in, bool with_ground_truth = true) {
    auto* input = cmd->add_option("--input", in.input_path, "edge list file");
    auto* gen = cmd->add_option("--generate", in.generate_spec,
                                "planted partition spec, e.g. k=10,size=100,pin=0.1,pout=0.01");
    input->excludes(gen);
    gen->excludes(input);
    cmd->add_option("--seed", in.seed, "master random seed")->capture_default_str();
    cmd->add_option("--workers", in.workers,
                    "worker threads (0 = all cores; overrides BACKBONE_WORKERS)");
    if (with_ground_truth)
        cmd->add_option("--ground-truth", in.ground_truth_path,
                        "community file \"node community\" per line");
}

void require_input(const InputOptions& in) {
    if (in.input_path.empty() && in.generate_spec.empty())
        throw CLI::ValidationError("input", "need --input or --generate");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure-preserving edge sparsification toolkit"};
    app.require_subcommand(1);

    // sweep
    InputOptions sweep_in;
    std::string methods_text = "re,js,ld";
    std::string ratios_text = "0.05:1.0:0.05";
    std::string sweep_out_dir = ".";
    backbone::SweepConfig sweep_config;
    bool no_diameter = false, no_clustering = false, no_centrality = false,
         no_community = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "score, filter and evaluate a ratio grid");
    add_input_options(sweep_cmd, sweep_in);
    sweep_cmd->add_option("--methods", methods_text,
                          "comma list of method tags, e.g. re,ld,local:js")
        ->capture_default_str();
    sweep_cmd->add_option("--ratios", ratios_text, "start:stop:step or comma list")
        ->capture_default_str();
    sweep_cmd->add_option("--out", sweep_out_dir, "output directory")->capture_default_str();
    sweep_cmd->add_option("--bc-samples", sweep_config.betweenness_samples,
                          "betweenness pivot count")
        ->capture_default_str();
    sweep_cmd->add_option("--eff-p", sweep_config.scorer.eff_p, "forest fire spread probability")
        ->capture_default_str();
    sweep_cmd
        ->add_option("--eff-burn-ratio", sweep_config.scorer.eff_target_burn_ratio,
                     "forest fire stop target, in multiples of m")
        ->capture_default_str();
    sweep_cmd->add_option("--ad-systems", sweep_config.scorer.ad_systems)
        ->capture_default_str();
    sweep_cmd->add_option("--ad-iterations", sweep_config.scorer.ad_iterations)
        ->capture_default_str();
    sweep_cmd->add_flag("--no-diameter", no_diameter, "skip the exact diameter");
    sweep_cmd->add_flag("--no-clustering", no_clustering, "skip clustering coefficients");
    sweep_cmd->add_flag("--no-centrality", no_centrality, "skip centrality rank columns");
    sweep_cmd->add_flag("--no-community", no_community, "skip community measures");
    sweep_cmd->callback([&] {
        require_input(sweep_in);
        LoadedGraph loaded = load_input(sweep_in);
        sweep_config.methods = parse_methods(methods_text);
        sweep_config.ratios = parse_ratios(ratios_text);
        sweep_config.seed = sweep_in.seed;
        sweep_config.scorer.workers =
            sweep_in.workers > 0 ? sweep_in.workers : env_workers();
        sweep_config.measures.diameter = !no_diameter;
        sweep_config.measures.clustering = !no_clustering;
        sweep_config.measures.centralities = !no_centrality;
        sweep_config.measures.community = !no_community;
        auto records = backbone::run_sweep(loaded.graph, loaded.ground_truth, sweep_config);
        std::filesystem::create_directories(sweep_out_dir);
        write_file(sweep_out_dir + "/sweep.csv", backbone::report_csv(records));
        write_file(sweep_out_dir + "/sweep.json", backbone::report_json(records));
        std::cout << "wrote " << records.size() << " rows to " << sweep_out_dir
                  << "/sweep.{csv,json}\n";
    });

    // correlate
    InputOptions corr_in;
    std::string tags_text = "re,tri,js,ts,qls,eff,ad,ld,mod";
    std::string corr_out = "correlation.csv";
    auto* corr_cmd = app.add_subcommand("correlate", "Spearman matrix between methods");
    add_input_options(corr_cmd, corr_in, /*with_ground_truth=*/false);
    corr_cmd->add_option("--tags", tags_text, "comma list; \"mod\" adds the community indicator")
        ->capture_default_str();
    corr_cmd->add_option("--out", corr_out, "output CSV file")->capture_default_str();
    corr_cmd->callback([&] {
        require_input(corr_in);
        LoadedGraph loaded = load_input(corr_in);
        std::vector<std::string> tags;
        std::stringstream ss(tags_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            backbone::MethodSpec::parse(item, /*allow_mod=*/true);
            tags.push_back(item);
        }
        backbone::ScorerOptions options;
        options.workers = corr_in.workers > 0 ? corr_in.workers : env_workers();
        const auto matrix =
            backbone::score_correlation_matrix(loaded.graph, tags, corr_in.seed, options);
        std::string csv = "method";
        for (const auto& label : matrix.labels) csv += "," + label;
        csv += '\n';
        for (std::size_t i = 0; i < matrix.labels.size(); ++i) {
            csv += matrix.labels[i];
            for (double v : matrix.rho[i]) {
                csv += ',';
                csv += backbone::format_double(v);
            }
            csv += '\n';
        }
        write_file(corr_out, csv);
        std::cout << "wrote " << matrix.labels.size() << "x" << matrix.labels.size()
                  << " matrix to " << corr_out << "\n";
    });

    // seir
    InputOptions seir_in;
    std::string seir_method = "ld";
    double seir_ratio = 0.2;
    backbone::SeirParams seir_params;
    std::string seir_out = "seir.csv";
    auto* seir_cmd =
        app.add_subcommand("seir", "epidemic curves, original vs sparsified");
    add_input_options(seir_cmd, seir_in, /*with_ground_truth=*/false);
    seir_cmd->add_option("--method", seir_method, "method tag")->capture_default_str();
    seir_cmd->add_option("--ratio", seir_ratio, "keep ratio")->capture_default_str();
    seir_cmd->add_option("--p", seir_params.transmission_prob, "transmission probability")
        ->capture_default_str();
    seir_cmd->add_option("--latency", seir_params.latency, "steps exposed")
        ->capture_default_str();
    seir_cmd->add_option("--infectious", seir_params.infectious_period, "steps infectious")
        ->capture_default_str();
    seir_cmd->add_option("--runs", seir_params.runs, "simulation runs")->capture_default_str();
    seir_cmd->add_option("--out", seir_out, "output CSV file")->capture_default_str();
    seir_cmd->callback([&] {
        require_input(seir_in);
        LoadedGraph loaded = load_input(seir_in);
        const int workers = seir_in.workers > 0 ? seir_in.workers : env_workers();
        const backbone::MethodSpec method = backbone::MethodSpec::parse(seir_method);
        backbone::ScorerOptions options;
        options.seed = seir_in.seed;
        options.workers = workers;
        backbone::EdgeScore score =
            backbone::compute_edge_score(loaded.graph, method.base, options);
        if (method.local) score = backbone::localize(loaded.graph, score, workers);
        const auto sparse =
            backbone::filter_by_ratio(loaded.graph, score, seir_ratio, seir_in.seed);

        seir_params.seed = seir_in.seed;
        const auto original = backbone::run_seir(loaded.graph, seir_params, workers);
        const auto reduced = backbone::run_seir(sparse.subgraph, seir_params, workers);

        const std::size_t horizon = std::max(original.horizon, reduced.horizon);
        std::string csv =
            "step,orig_s_median,orig_e_median,orig_i_median,orig_r_median,"
            "orig_s_std,orig_e_std,orig_i_std,orig_r_std,"
            "sparse_s_median,sparse_e_median,sparse_i_median,sparse_r_median,"
            "sparse_s_std,sparse_e_std,sparse_i_std,sparse_r_std\n";
        const auto cell = [](const std::vector<double>& v, std::size_t t) {
            // Finished curves hold their terminal value.
            return backbone::format_double(t < v.size() ? v[t] : v.back());
        };
        for (std::size_t t = 0; t < horizon; ++t) {
            csv += std::to_string(t);
            for (const auto* curves : {&original, &reduced})
                for (const auto& block : {curves->median, curves->stddev})
                    for (int st = 0; st < 4; ++st) {
                        csv += ',';
                        csv += cell(block[st], t);
                    }
            csv += '\n';
        }
        write_file(seir_out, csv);
        std::cout << "wrote " << horizon << " steps to " << seir_out << " (kept "
                  << sparse.subgraph.num_edges() << "/" << loaded.graph.num_edges()
                  << " edges)\n";
    });

    // generate
    InputOptions gen_in;
    std::string gen_spec_text;
    std::string gen_out = "graph.txt";
    std::string gen_truth_out;
    auto* gen_cmd = app.add_subcommand("generate", "write a planted partition graph");
    gen_cmd->add_option("--spec", gen_spec_text, "k=...,size=...,pin=...,pout=...")
        ->required();
    gen_cmd->add_option("--seed", gen_in.seed, "master random seed")->capture_default_str();
    gen_cmd->add_option("--out", gen_out, "edge list file")->capture_default_str();
    gen_cmd->add_option("--ground-truth-out", gen_truth_out, "community file");
    gen_cmd->callback([&] {
        const auto generated = backbone::generate_planted_partition(
            parse_generate_spec(gen_spec_text, gen_in.seed));
        if (generated.low_degree_warning)
            std::cerr << "warning: expected average degree below 1\n";
        backbone::write_edge_list(generated.graph, gen_out);
        if (!gen_truth_out.empty())
            backbone::write_ground_truth(generated.ground_truth, gen_truth_out);
        std::cout << "wrote " << generated.graph.num_nodes() << " nodes, "
                  << generated.graph.num_edges() << " edges to " << gen_out << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const backbone::InvalidParameterError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const backbone::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
