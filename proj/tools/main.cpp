// biproj: generate, project and analyze Chung-Lu style bipartite graphs
// and their one-mode projections.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "biproj/errors.hpp"
#include "biproj/experiments.hpp"
#include "biproj/graph_stats.hpp"
#include "biproj/ingest.hpp"
#include "biproj/powerlaw_fit.hpp"
#include "biproj/projection.hpp"
#include "biproj/rng.hpp"
#include "biproj/sampler.hpp"
#include "biproj/theory.hpp"
#include "biproj/version.hpp"

using json = nlohmann::ordered_json;
using namespace biproj;

namespace {

struct ModelOptions {
    std::uint64_t n_left = 10'000;
    std::uint64_t n_right = 10'000;
    double alpha_left = 2.5;
    double alpha_right = 2.5;
    std::optional<double> wmax_abs;
    double wmax_exp = 0.3;
    double delta = 0.2;
    bool continuous = false;
    std::uint64_t seed = 1;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--nl", n_left, "number of left nodes");
        cmd->add_option("--nr", n_right, "number of right nodes");
        cmd->add_option("--alpha-l", alpha_left, "left decay exponent");
        cmd->add_option("--alpha-r", alpha_right, "right decay exponent");
        cmd->add_option("--wmax", wmax_abs, "absolute weight cap");
        cmd->add_option("--wmax-exp", wmax_exp, "weight cap as nR^exponent (default rule)");
        cmd->add_option("--delta", delta, "assumption-family parameter");
        cmd->add_flag("--continuous", continuous, "continuous instead of discrete weights");
        cmd->add_option("--seed", seed, "RNG seed");
    }

    ModelConfig to_config() const {
        ModelConfig config;
        config.n_left = n_left;
        config.n_right = n_right;
        config.alpha_left = alpha_left;
        config.alpha_right = alpha_right;
        config.wmax = wmax_abs ? WmaxRule::absolute(*wmax_abs) : WmaxRule::exponent(wmax_exp);
        config.delta = delta;
        config.discrete = !continuous;
        config.seed = seed;
        return config;
    }

    json to_json() const {
        json j;
        j["nl"] = n_left;
        j["nr"] = n_right;
        j["alpha_l"] = alpha_left;
        j["alpha_r"] = alpha_right;
        if (wmax_abs)
            j["wmax"] = *wmax_abs;
        else
            j["wmax_exp"] = wmax_exp;
        j["delta"] = delta;
        j["discrete"] = !continuous;
        j["seed"] = seed;
        return j;
    }
};

void write_json(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

std::ofstream open_csv(const std::string& path, const std::string& config_line) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open " + path + " for writing");
    out << "# biproj v" << kVersion << '\n';
    out << "# " << config_line << '\n';
    out.precision(12);
    return out;
}

json report_to_json(const CoefficientReport& report) {
    json j;
    j["mean_local_clustering"] = report.mean_local_clustering;
    j["global_clustering"] = report.global_clustering;
    j["mean_local_closure"] = report.mean_local_closure;
    j["defined_clustering_nodes"] = report.defined_clustering_nodes;
    j["defined_closure_nodes"] = report.defined_closure_nodes;
    return j;
}

json assumptions_to_json(const AssumptionReport& report) {
    json j;
    j["delta"] = report.delta;
    j["well_defined_probs"] = report.well_defined_probs;
    j["bounded_range"] = report.bounded_range;
    j["bounded_moments"] = report.bounded_moments;
    json details;
    for (const auto& [label, sides] : report.details)
        details[label] = {{"observed", sides.first}, {"bound", sides.second}};
    j["details"] = details;
    return j;
}

json moments_to_json(const MomentBundle& mb) {
    json j;
    j["n_left"] = mb.n_left;
    j["n_right"] = mb.n_right;
    j["M_L1"] = mb.M_L1;
    j["M_L2"] = mb.M_L2;
    j["M_R1"] = mb.M_R1;
    j["M_R2"] = mb.M_R2;
    j["M_R3"] = mb.M_R3;
    j["M_R4"] = mb.M_R4;
    return j;
}

int cmd_generate(const ModelOptions& opts, const std::string& sampler,
                 const std::string& out_path, bool save_weights, std::uint64_t pair_cap) {
    auto config = opts.to_config();
    auto weights = generate_weights(config);
    if (save_weights) {
        weights.left.save_file(out_path + ".sl.txt");
        weights.right.save_file(out_path + ".sr.txt");
    }
    const MomentBundle mb = MomentBundle::from_sequences(weights.left, weights.right);
    auto assumptions = check_assumptions(weights.left, weights.right, config.delta);

    BipartiteGraph graph;
    const std::uint64_t graph_seed = mix_seed(config.seed, 0x6EA9);
    if (sampler == "fast") {
        graph = sample_fast(weights.left, weights.right, graph_seed);
    } else if (sampler == "naive") {
        graph = sample_naive(weights.left, weights.right, graph_seed, pair_cap);
    } else {
        throw ParameterError("unknown sampler '" + sampler + "' (use fast or naive)");
    }
    graph.save_file(out_path);

    json meta;
    meta["version"] = kVersion;
    meta["command"] = "generate";
    meta["config"] = opts.to_json();
    meta["sampler"] = sampler;
    meta["n_edges"] = graph.num_edges();
    meta["moments"] = moments_to_json(mb);
    meta["assumptions"] = assumptions_to_json(assumptions);
    if (!assumptions.all())
        meta["warnings"] = {"assumption checks failed; asymptotic predictions may be off"};
    write_json(meta, out_path + ".meta.json");

    std::cout << "wrote " << graph.num_edges() << " edges to " << out_path << '\n';
    std::cout << "moments: M_L1=" << mb.M_L1 << " M_R1=" << mb.M_R1 << " M_R2=" << mb.M_R2
              << " M_R3=" << mb.M_R3 << " clustering_ratio=" << mb.clustering_ratio() << '\n';
    std::cout << "assumptions: well_defined=" << assumptions.well_defined_probs
              << " bounded_range=" << assumptions.bounded_range
              << " bounded_moments=" << assumptions.bounded_moments << '\n';
    if (!assumptions.all())
        std::cerr << "warning: assumption checks failed (see meta file)\n";
    return 0;
}

int cmd_project(const std::string& in_path, const std::string& out_path, bool multiplicity,
                std::uint64_t pair_cap) {
    auto graph = BipartiteGraph::load_file(in_path);
    auto projected = project(graph, multiplicity, pair_cap);
    projected.save_file(out_path);
    std::cout << "projected " << graph.num_edges() << " bipartite edges onto "
              << projected.num_nodes() << " nodes, " << projected.num_edges() << " edges\n";
    return 0;
}

int cmd_stats(const std::string& in_path, const std::string& out_path,
              const std::string& curves_prefix, const std::string& weights_path,
              std::uint64_t min_bin_size) {
    auto projected = ProjectedGraph::load_file(in_path);
    auto stats = count_triangles(projected);
    auto report = coefficient_report(stats);

    json j;
    j["version"] = kVersion;
    j["command"] = "stats";
    j["input"] = in_path;
    j["n_nodes"] = projected.num_nodes();
    j["n_edges"] = projected.num_edges();
    j["report"] = report_to_json(report);
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_json(j, out_path);

    if (!curves_prefix.empty()) {
        const std::string config_line =
            "input=" + in_path + " min_bin_size=" + std::to_string(min_bin_size);
        for (auto mode : {CoefficientMode::Clustering, CoefficientMode::Closure}) {
            const bool clustering = mode == CoefficientMode::Clustering;
            auto bins = degree_binned_coefficient(stats, mode, min_bin_size);
            auto out = open_csv(curves_prefix + (clustering ? "_clustering_by_degree.csv"
                                                            : "_closure_by_degree.csv"),
                                config_line);
            out << "bin,value,n_nodes\n";
            for (const auto& [degree, bin] : bins)
                out << degree << ',' << bin.value << ',' << bin.n_nodes << '\n';
        }
        if (!weights_path.empty()) {
            auto weights = WeightSequence::load_file(weights_path, Side::Left);
            for (auto mode : {CoefficientMode::Clustering, CoefficientMode::Closure}) {
                const bool clustering = mode == CoefficientMode::Clustering;
                auto bins = weight_binned_conditional(stats, weights, mode, min_bin_size);
                auto out = open_csv(curves_prefix + (clustering ? "_clustering_by_weight.csv"
                                                                : "_closure_by_weight.csv"),
                                    config_line + " weights=" + weights_path);
                out << "bin,value,n_nodes\n";
                for (const auto& [w, bin] : bins)
                    out << w << ',' << bin.value << ',' << bin.n_nodes << '\n';
            }
        }
    }
    return 0;
}

int cmd_predict(const ModelOptions& opts, const std::optional<std::string>& sl_path,
                const std::optional<std::string>& sr_path, const std::string& quantity,
                double w_limit, const std::string& out_path) {
    std::optional<WeightSequence> sl, sr;
    if (sl_path && sr_path) {
        sl.emplace(WeightSequence::load_file(*sl_path, Side::Left));
        sr.emplace(WeightSequence::load_file(*sr_path, Side::Right));
    } else if (!sl_path && !sr_path) {
        auto generated = generate_weights(opts.to_config());
        sl.emplace(std::move(generated.left));
        sr.emplace(std::move(generated.right));
    } else {
        throw ParameterError("provide both --sl and --sr, or neither");
    }
    const MomentBundle mb = MomentBundle::from_sequences(*sl, *sr);

    json scalars;
    scalars["version"] = kVersion;
    scalars["command"] = "predict";
    scalars["moments"] = moments_to_json(mb);
    scalars["clustering_ratio"] = mb.clustering_ratio();
    scalars["predicted_global_clustering"] = predict_global_clustering(mb);
    scalars["predicted_closure"] = predict_closure(mb);
    std::cout << scalars.dump(2) << '\n';

    if (!out_path.empty()) {
        auto out = open_csv(out_path, "quantity=" + quantity + " seed=" +
                                          std::to_string(opts.seed));
        out << "w,predicted_value\n";
        for (double w = 1.0; w <= w_limit; w += 1.0) {
            double value = 0.0;
            if (quantity == "clustering")
                value = predict_local_clustering(w, mb);
            else if (quantity == "closure")
                value = predict_closure(mb);
            else if (quantity == "degree")
                value = predict_expected_degree(w, mb);
            else
                throw ParameterError("unknown quantity '" + quantity + "'");
            out << w << ',' << value << '\n';
        }
    }
    return 0;
}

int cmd_compare(const std::string& data_path, bool swap_sides, std::uint64_t trials,
                std::uint64_t seed, const std::string& out_path, std::uint64_t pair_cap) {
    auto dataset = load_bipartite_edgelist(data_path, swap_sides);
    if (!out_path.empty()) write_label_map(dataset, out_path + ".labels");
    auto result = compare_dataset(dataset, trials, seed, pair_cap);

    auto moments_json = [](const CoefficientMoments& m) {
        json j;
        j["mean_local_clustering"] = {{"mean", m.mean_local_clustering},
                                      {"variance", m.var_local_clustering}};
        j["global_clustering"] = {{"mean", m.global_clustering},
                                  {"variance", m.var_global_clustering}};
        j["mean_local_closure"] = {{"mean", m.mean_local_closure},
                                   {"variance", m.var_local_closure}};
        j["trials"] = m.trials;
        return j;
    };
    json j;
    j["version"] = kVersion;
    j["command"] = "compare";
    j["dataset"] = {{"name", result.meta.name},
                    {"n_left", result.meta.n_left},
                    {"n_right", result.meta.n_right},
                    {"n_edges", result.meta.n_edges},
                    {"dropped_left", result.dropped_left},
                    {"dropped_right", result.dropped_right}};
    j["seed"] = seed;
    if (result.data_available) j["data"] = report_to_json(result.data);
    if (result.ours.trials > 0) j["ours"] = moments_json(result.ours);
    if (result.random_intersection.trials > 0)
        j["random_intersection"] = moments_json(result.random_intersection);
    if (!result.note.empty()) j["note"] = result.note;
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        write_json(j, out_path);

    std::cout.precision(3);
    std::cout << "dataset " << result.meta.name << " (" << trials << " trials)\n"
              << "                      data    ours    RI\n"
              << "mean local clustering " << result.data.mean_local_clustering << "    "
              << result.ours.mean_local_clustering << "    "
              << result.random_intersection.mean_local_clustering << '\n'
              << "global clustering     " << result.data.global_clustering << "    "
              << result.ours.global_clustering << "    "
              << result.random_intersection.global_clustering << '\n'
              << "mean local closure    " << result.data.mean_local_closure << "    "
              << result.ours.mean_local_closure << "    "
              << result.random_intersection.mean_local_closure << '\n';
    if (!result.note.empty()) std::cout << "note: " << result.note << '\n';
    return 0;
}

int cmd_figure(const std::string& id, double scale, ModelOptions opts,
               const std::optional<std::string>& data_path, bool swap_sides,
               std::uint64_t min_bin_size, const std::string& out_path,
               std::uint64_t pair_cap) {
    if (scale <= 0.0 || scale > 1.0) throw ParameterError("--scale must be in (0, 1]");
    const std::string config_line =
        "figure=" + id + " scale=" + std::to_string(scale) + " seed=" + std::to_string(opts.seed);

    if (id == "fig1" || id == "fig3") {
        const auto mode = id == "fig1" ? CoefficientMode::Clustering : CoefficientMode::Closure;
        opts.n_left = opts.n_right =
            static_cast<std::uint64_t>(std::llround(10'000'000.0 * scale));
        auto config = opts.to_config();
        auto curve = weight_coefficient_curve(config, mode, min_bin_size);
        auto out = open_csv(out_path, config_line);
        out << "w,empirical,predicted,n_nodes\n";
        for (const auto& point : curve)
            out << point.weight << ',' << point.empirical << ',' << point.predicted << ','
                << point.n_nodes << '\n';
        return 0;
    }
    if (id == "fig2") {
        opts.n_left = opts.n_right =
            static_cast<std::uint64_t>(std::llround(1'000'000.0 * scale));
        opts.wmax_exp = 0.5;
        auto config = opts.to_config();
        std::vector<double> grid;
        for (double a = 3.1; a < 4.95; a += 0.2) grid.push_back(a);
        auto points = global_clustering_sweep(config, grid);
        auto out = open_csv(out_path, config_line);
        out << "alpha_r,sampled,predicted\n";
        for (const auto& point : points)
            out << point.alpha_right << ',' << point.sampled << ',' << point.predicted << '\n';
        return 0;
    }
    if (id == "fig4" || id == "fig5") {
        if (!data_path) throw ParameterError(id + " needs --data <bipartite edge list>");
        const auto mode = id == "fig4" ? CoefficientMode::Clustering : CoefficientMode::Closure;
        auto dataset = load_bipartite_edgelist(*data_path, swap_sides);
        auto curves = degree_coefficient_curves(dataset, mode, opts.seed, min_bin_size, pair_cap);
        auto out = open_csv(out_path, config_line + " data=" + *data_path);
        out << "degree,data,model,random_intersection\n";
        for (const auto& point : curves) {
            out << point.degree << ',';
            if (point.has_data) out << point.data;
            out << ',';
            if (point.has_model) out << point.model;
            out << ',';
            if (point.has_random_intersection) out << point.random_intersection;
            out << '\n';
        }
        return 0;
    }
    throw ParameterError("unknown figure id '" + id + "' (fig1..fig5)");
}

int cmd_fit(const std::optional<std::string>& in_path, const std::optional<std::string>& data_path,
            const std::string& side, bool swap_sides, std::optional<std::int64_t> x_min,
            const std::string& out_path) {
    std::vector<std::int64_t> samples;
    if (in_path) {
        auto seq = WeightSequence::load_file(*in_path, Side::Left);
        for (double w : seq.values()) samples.push_back(static_cast<std::int64_t>(w));
    } else if (data_path) {
        auto dataset = load_bipartite_edgelist(*data_path, swap_sides);
        auto weights = degrees_as_weights(dataset.graph);
        const auto& seq = side == "right" ? weights.right : weights.left;
        for (double w : seq.values()) samples.push_back(static_cast<std::int64_t>(w));
    } else {
        throw ParameterError("fit needs --in <values> or --data <edge list>");
    }
    auto fit = fit_power_law(samples, x_min);

    json j;
    j["version"] = kVersion;
    j["command"] = "fit";
    j["n_samples"] = samples.size();
    j["alpha"] = fit.alpha;
    j["x_min"] = fit.x_min;
    j["stderr"] = fit.stderr_alpha;
    j["ks_distance"] = fit.ks_distance;
    j["n_tail"] = fit.n_tail;
    std::cout << j.dump(2) << '\n';
    if (!out_path.empty()) write_json(j, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chung-Lu style bipartite graph generation, projection and analysis"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("biproj ") + kVersion);

    std::uint64_t pair_cap = 2'000'000'000ULL;
    app.add_option("--pair-cap", pair_cap,
                   "guard for quadratic work (naive sampling, projection)")
        ->capture_default_str();

    // generate
    auto* generate = app.add_subcommand("generate", "sample a bipartite graph from the model");
    ModelOptions gen_opts;
    gen_opts.add_flags(generate);
    std::string gen_sampler = "fast";
    std::string gen_out = "bipartite.txt";
    bool gen_save_weights = false;
    generate->add_option("--sampler", gen_sampler, "fast or naive")->capture_default_str();
    generate->add_option("--out", gen_out, "output edge list path")->capture_default_str();
    generate->add_flag("--save-weights", gen_save_weights,
                       "also write <out>.sl.txt / <out>.sr.txt weight files");

    // project
    auto* project_cmd = app.add_subcommand("project", "one-mode projection onto the left nodes");
    std::string proj_in, proj_out = "projected.txt";
    bool proj_mult = false;
    project_cmd->add_option("--in", proj_in, "bipartite edge list")->required();
    project_cmd->add_option("--out", proj_out, "output edge list path")->capture_default_str();
    project_cmd->add_flag("--multiplicity", proj_mult, "keep common-neighbor counts");

    // stats
    auto* stats_cmd = app.add_subcommand("stats", "coefficients of a projected graph");
    std::string stats_in, stats_out, stats_curves, stats_weights;
    std::uint64_t min_bin_size = 5;
    stats_cmd->add_option("--in", stats_in, "projected edge list")->required();
    stats_cmd->add_option("--out", stats_out, "JSON report path (stdout when omitted)");
    stats_cmd->add_option("--curves", stats_curves, "prefix for binned CSV curves");
    stats_cmd->add_option("--weights", stats_weights,
                          "node weight file: also emit per-weight curves");
    stats_cmd->add_option("--min-bin-size", min_bin_size, "drop smaller bins")
        ->capture_default_str();

    // predict
    auto* predict_cmd = app.add_subcommand("predict", "closed-form predictions");
    ModelOptions pred_opts;
    pred_opts.add_flags(predict_cmd);
    std::optional<std::string> pred_sl, pred_sr;
    std::string pred_quantity = "clustering";
    std::string pred_out;
    double pred_w_limit = 50.0;
    predict_cmd->add_option("--sl", pred_sl, "left weight file");
    predict_cmd->add_option("--sr", pred_sr, "right weight file");
    predict_cmd->add_option("--quantity", pred_quantity, "clustering, closure or degree")
        ->capture_default_str();
    predict_cmd->add_option("--w-limit", pred_w_limit, "largest weight in the curve")
        ->capture_default_str();
    predict_cmd->add_option("--out", pred_out, "CSV path for the w,predicted_value curve");

    // compare
    auto* compare_cmd = app.add_subcommand("compare", "data vs model vs random intersection");
    std::string cmp_data, cmp_out;
    bool cmp_swap = false;
    std::uint64_t cmp_trials = 10, cmp_seed = 1;
    compare_cmd->add_option("--data", cmp_data, "bipartite edge list")->required();
    compare_cmd->add_flag("--swap-sides", cmp_swap, "swap the file's two columns");
    compare_cmd->add_option("--trials", cmp_trials, "model samples")->capture_default_str();
    compare_cmd->add_option("--seed", cmp_seed, "RNG seed")->capture_default_str();
    compare_cmd->add_option("--out", cmp_out, "JSON result path (stdout when omitted)");

    // figure
    auto* figure_cmd = app.add_subcommand("figure", "reproduce a figure protocol as CSV");
    ModelOptions fig_opts;
    fig_opts.add_flags(figure_cmd);
    std::string fig_id;
    double fig_scale = 0.01;
    std::optional<std::string> fig_data;
    bool fig_swap = false;
    std::uint64_t fig_min_bin = 5;
    std::string fig_out = "figure.csv";
    figure_cmd->add_option("--id", fig_id, "fig1..fig5")->required();
    figure_cmd->add_option("--scale", fig_scale, "fraction of the full protocol size")
        ->capture_default_str();
    figure_cmd->add_option("--data", fig_data, "bipartite edge list (fig4/fig5)");
    figure_cmd->add_flag("--swap-sides", fig_swap, "swap the file's two columns");
    figure_cmd->add_option("--min-bin-size", fig_min_bin, "drop smaller bins")
        ->capture_default_str();
    figure_cmd->add_option("--out", fig_out, "CSV output path")->capture_default_str();

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "discrete power-law fit with KS threshold search");
    std::optional<std::string> fit_in, fit_data;
    std::string fit_side = "left";
    bool fit_swap = false;
    std::optional<std::int64_t> fit_xmin;
    std::string fit_out;
    fit_cmd->add_option("--in", fit_in, "one integer sample per line");
    fit_cmd->add_option("--data", fit_data, "bipartite edge list (fit its degrees)");
    fit_cmd->add_option("--side", fit_side, "left or right degrees")->capture_default_str();
    fit_cmd->add_flag("--swap-sides", fit_swap, "swap the file's two columns");
    fit_cmd->add_option("--xmin", fit_xmin, "fix the threshold instead of searching");
    fit_cmd->add_option("--out", fit_out, "JSON result path");

    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*generate)
            return cmd_generate(gen_opts, gen_sampler, gen_out, gen_save_weights,
                                pair_cap);
        if (*project_cmd) return cmd_project(proj_in, proj_out, proj_mult, pair_cap);
        if (*stats_cmd)
            return cmd_stats(stats_in, stats_out, stats_curves, stats_weights,
                             min_bin_size);
        if (*predict_cmd)
            return cmd_predict(pred_opts, pred_sl, pred_sr, pred_quantity, pred_w_limit,
                               pred_out);
        if (*compare_cmd)
            return cmd_compare(cmp_data, cmp_swap, cmp_trials, cmp_seed, cmp_out, pair_cap);
        if (*figure_cmd)
            return cmd_figure(fig_id, fig_scale, fig_opts, fig_data, fig_swap, fig_min_bin,
                              fig_out, pair_cap);
        if (*fit_cmd)
            return cmd_fit(fit_in, fit_data, fit_side, fit_swap, fit_xmin, fit_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
