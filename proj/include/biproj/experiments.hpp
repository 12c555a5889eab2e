#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biproj/graph_stats.hpp"
#include "biproj/ingest.hpp"
#include "biproj/theory.hpp"
#include "biproj/weights.hpp"

namespace biproj {

// Maximum-weight rule: either an absolute cap or n_right^exponent.
struct WmaxRule {
    enum class Kind { Absolute, Exponent };
    Kind kind = Kind::Exponent;
    double value = 0.3;

    double resolve(std::uint64_t n_right) const;
    static WmaxRule absolute(double v) { return {Kind::Absolute, v}; }
    static WmaxRule exponent(double e) { return {Kind::Exponent, e}; }
};

struct ModelConfig {
    std::uint64_t n_left = 0;
    std::uint64_t n_right = 0;
    double alpha_left = 2.5;
    double alpha_right = 2.5;
    WmaxRule wmax = WmaxRule::exponent(0.3);
    double delta = 0.2;
    bool discrete = true;
    std::uint64_t seed = 1;
};

struct GeneratedWeights {
    WeightSequence left;
    WeightSequence right;
};

// Left and right power-law weights from independent substreams of the seed.
GeneratedWeights generate_weights(const ModelConfig& config);

// One row of a per-weight coefficient curve.
struct WeightCurvePoint {
    double weight = 0.0;
    double empirical = 0.0;
    double predicted = 0.0;
    std::uint64_t n_nodes = 0;
};

// Samples the model once and bins the conditional local clustering
// (or closure) by node weight, next to the closed-form prediction.
std::vector<WeightCurvePoint> weight_coefficient_curve(const ModelConfig& config,
                                                       CoefficientMode mode,
                                                       std::uint64_t min_bin_size = 5);

struct SweepPoint {
    double alpha_right = 0.0;
    double sampled = 0.0;
    double predicted = 0.0;
};

// Global clustering across a grid of right decay exponents, sampled vs
// predicted from the realized sequence moments.
std::vector<SweepPoint> global_clustering_sweep(const ModelConfig& base,
                                                const std::vector<double>& alpha_right_grid);

// One row of a per-degree coefficient curve (dataset figures).
struct DegreeCurvePoint {
    std::uint32_t degree = 0;
    double data = 0.0;
    bool has_data = false;
    double model = 0.0;
    bool has_model = false;
    double random_intersection = 0.0;
    bool has_random_intersection = false;
};

// Per-degree clustering/closure for the data projection, one model sample
// and one random-intersection sample, all with data-derived weights.
std::vector<DegreeCurvePoint> degree_coefficient_curves(const LoadedDataset& dataset,
                                                        CoefficientMode mode, std::uint64_t seed,
                                                        std::uint64_t min_bin_size = 5,
                                                        std::uint64_t pair_cap = 2'000'000'000ULL);

struct CoefficientMoments {
    double mean_local_clustering = 0.0, var_local_clustering = 0.0;
    double global_clustering = 0.0, var_global_clustering = 0.0;
    double mean_local_closure = 0.0, var_local_closure = 0.0;
    std::uint64_t trials = 0;
};

struct ComparisonResult {
    DatasetMeta meta;
    std::uint64_t dropped_left = 0, dropped_right = 0;
    bool data_available = false;
    CoefficientReport data;
    bool ours_available = false;
    CoefficientMoments ours;
    bool ri_available = false;
    CoefficientMoments random_intersection;
    std::string note;  // filled when a projection guard forced a partial report
};

// Data coefficients vs. mean +- variance over `trials` samples of the
// model and of the random-intersection baseline, using degrees from the
// data as weights. A tripped projection guard leaves that piece
// unavailable and noted instead of failing the whole comparison.
ComparisonResult compare_dataset(const LoadedDataset& dataset, std::uint64_t trials,
                                 std::uint64_t seed,
                                 std::uint64_t pair_cap = 2'000'000'000ULL);

}  // namespace biproj
