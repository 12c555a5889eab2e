#include "biproj/experiments.hpp"

#include <algorithm>
#include <cmath>

#include "biproj/errors.hpp"
#include "biproj/projection.hpp"
#include "biproj/rng.hpp"
#include "biproj/sampler.hpp"

namespace biproj {

double WmaxRule::resolve(std::uint64_t n_right) const {
    return kind == Kind::Absolute ? value : std::pow(static_cast<double>(n_right), value);
}

GeneratedWeights generate_weights(const ModelConfig& config) {
    if (config.n_left == 0 || config.n_right == 0)
        throw ParameterError("node counts must be positive");
    double wmax = config.wmax.resolve(config.n_right);
    if (config.discrete) wmax = std::max(1.0, std::floor(wmax));
    PowerLawParams left_params{config.alpha_left, 1.0, wmax, config.discrete};
    PowerLawParams right_params{config.alpha_right, 1.0, wmax, config.discrete};
    WeightSequence left = sample_power_law(left_params, config.n_left,
                                           mix_seed(config.seed, 0xA11CE), Side::Left);
    WeightSequence right = sample_power_law(right_params, config.n_right,
                                            mix_seed(config.seed, 0xB0B), Side::Right);
    return GeneratedWeights{std::move(left), std::move(right)};
}

std::vector<WeightCurvePoint> weight_coefficient_curve(const ModelConfig& config,
                                                       CoefficientMode mode,
                                                       std::uint64_t min_bin_size) {
    auto weights = generate_weights(config);
    const MomentBundle mb = MomentBundle::from_sequences(weights.left, weights.right);
    BipartiteGraph gb = sample_fast(weights.left, weights.right, mix_seed(config.seed, 0x6EA9));
    ProjectedGraph p = project(gb);
    GraphStats stats = count_triangles(p);
    auto bins = weight_binned_conditional(stats, weights.left, mode, min_bin_size);

    std::vector<WeightCurvePoint> curve;
    curve.reserve(bins.size());
    for (const auto& [w, bin] : bins) {
        WeightCurvePoint point;
        point.weight = w;
        point.empirical = bin.value;
        point.predicted = mode == CoefficientMode::Clustering ? predict_local_clustering(w, mb)
                                                              : predict_closure(mb);
        point.n_nodes = bin.n_nodes;
        curve.push_back(point);
    }
    return curve;
}

std::vector<SweepPoint> global_clustering_sweep(const ModelConfig& base,
                                                const std::vector<double>& alpha_right_grid) {
    std::vector<SweepPoint> points;
    points.reserve(alpha_right_grid.size());
    for (double alpha_right : alpha_right_grid) {
        ModelConfig config = base;
        config.alpha_right = alpha_right;
        config.seed = mix_seed(base.seed, static_cast<std::uint64_t>(alpha_right * 1000.0));
        auto weights = generate_weights(config);
        const MomentBundle mb = MomentBundle::from_sequences(weights.left, weights.right);
        BipartiteGraph gb = sample_fast(weights.left, weights.right, mix_seed(config.seed, 0x6EA9));
        ProjectedGraph p = project(gb);
        GraphStats stats = count_triangles(p);
        SweepPoint point;
        point.alpha_right = alpha_right;
        point.sampled = global_clustering(stats).value_or(0.0);
        point.predicted = predict_global_clustering(mb);
        points.push_back(point);
    }
    return points;
}

std::vector<DegreeCurvePoint> degree_coefficient_curves(const LoadedDataset& dataset,
                                                        CoefficientMode mode, std::uint64_t seed,
                                                        std::uint64_t min_bin_size,
                                                        std::uint64_t pair_cap) {
    const DegreeWeights weights = degrees_as_weights(dataset.graph);

    auto curve_of = [&](const BipartiteGraph& gb) {
        return degree_binned_coefficient(count_triangles(project(gb, false, pair_cap)), mode,
                                         min_bin_size);
    };
    const auto data_curve = curve_of(dataset.graph);
    const auto model_curve = curve_of(
        sample_fast(weights.left, weights.right, mix_seed(seed, 0x0DE1)));
    const auto ri_curve = curve_of(sample_random_intersection(
        weights.left, dataset.graph.n_right, mix_seed(seed, 0x0DE2)));

    std::map<std::uint32_t, DegreeCurvePoint> merged;
    for (const auto& [d, bin] : data_curve) {
        merged[d].data = bin.value;
        merged[d].has_data = true;
    }
    for (const auto& [d, bin] : model_curve) {
        merged[d].model = bin.value;
        merged[d].has_model = true;
    }
    for (const auto& [d, bin] : ri_curve) {
        merged[d].random_intersection = bin.value;
        merged[d].has_random_intersection = true;
    }
    std::vector<DegreeCurvePoint> out;
    out.reserve(merged.size());
    for (auto& [d, point] : merged) {
        point.degree = d;
        out.push_back(point);
    }
    return out;
}

namespace {

class RunningMoments {
  public:
    void add(double x) {
        ++n_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(n_);
        m2_ += delta * (x - mean_);
    }
    double mean() const { return mean_; }
    double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }

  private:
    std::uint64_t n_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

}  // namespace

ComparisonResult compare_dataset(const LoadedDataset& dataset, std::uint64_t trials,
                                 std::uint64_t seed, std::uint64_t pair_cap) {
    if (trials < 1) throw ParameterError("need at least one trial");
    ComparisonResult result;
    result.meta = dataset.meta;

    const DegreeWeights weights = degrees_as_weights(dataset.graph);
    result.dropped_left = weights.dropped_left;
    result.dropped_right = weights.dropped_right;

    auto note_guard = [&result](const char* piece, const SizeError& e) {
        if (!result.note.empty()) result.note += "; ";
        result.note += std::string(piece) + " skipped: " + e.what();
    };

    try {
        result.data = coefficient_report(project(dataset.graph, false, pair_cap));
        result.data_available = true;
    } catch (const SizeError& e) {
        note_guard("data projection", e);
    }

    auto run_trials = [&](auto sample_one, CoefficientMoments& out, const char* piece) {
        RunningMoments clust, global, closure;
        std::uint64_t done = 0;
        try {
            for (std::uint64_t t = 0; t < trials; ++t) {
                auto report = coefficient_report(project(sample_one(t), false, pair_cap));
                clust.add(report.mean_local_clustering);
                global.add(report.global_clustering);
                closure.add(report.mean_local_closure);
                ++done;
            }
        } catch (const SizeError& e) {
            note_guard(piece, e);
        }
        out = {clust.mean(),   clust.variance(), global.mean(), global.variance(),
               closure.mean(), closure.variance(), done};
        return done == trials;
    };

    result.ours_available = run_trials(
        [&](std::uint64_t t) {
            return sample_fast(weights.left, weights.right,
                               mix_seed(mix_seed(seed, t), 0x0DE1));
        },
        result.ours, "model trials");
    result.ri_available = run_trials(
        [&](std::uint64_t t) {
            return sample_random_intersection(weights.left, dataset.graph.n_right,
                                              mix_seed(mix_seed(seed, t), 0x0DE2));
        },
        result.random_intersection, "random-intersection trials");
    return result;
}

}  // namespace biproj
