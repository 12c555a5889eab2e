#include "biproj/theory.hpp"

#include <algorithm>
#include <cmath>

#include "biproj/errors.hpp"
#include "biproj/rng.hpp"
#include "biproj/sampler.hpp"

namespace biproj {

MomentBundle MomentBundle::from_sequences(const WeightSequence& left,
                                          const WeightSequence& right) {
    MomentBundle mb;
    mb.n_left = left.size();
    mb.n_right = right.size();
    mb.M_L1 = left.moment(1);
    mb.M_L2 = left.moment(2);
    mb.M_R1 = right.moment(1);
    mb.M_R2 = right.moment(2);
    mb.M_R3 = right.moment(3);
    mb.M_R4 = right.moment(4);
    return mb;
}

EdgeProbability p_edge_asymptotic(double w_u1, double w_u2, const MomentBundle& mb) {
    if (!(w_u1 > 0.0) || !(w_u2 > 0.0)) throw ParameterError("weights must be positive");
    const double p = mb.M_R2 / (mb.M_R1 * mb.M_R1) * w_u1 * w_u2 /
                     static_cast<double>(mb.n_right);
    EdgeProbability out;
    out.first_order = p;
    out.corrected = p - p * p / 2.0 +
                    (p / 6.0 + mb.M_R4 / (2.0 * static_cast<double>(mb.n_right) * mb.M_R2 * mb.M_R2)) *
                        p * p;
    return out;
}

double p_edge_exact(double w_u1, double w_u2, const WeightSequence& right) {
    const double sum_right = right.sum();
    double log_miss = 0.0;
    for (double wv : right.values()) {
        const double q = edge_probability(w_u1, wv, sum_right) *
                         edge_probability(w_u2, wv, sum_right);
        if (q >= 1.0) return 1.0;
        log_miss += std::log1p(-q);
    }
    return -std::expm1(log_miss);
}

double p_wedge_exact(double w_u, double w_u1, double w_u2, const WeightSequence& right) {
    const double sum_right = right.sum();
    // P(neither (u,u1) nor (u,u2) is a projected edge): per right node,
    // either u misses it or both u1 and u2 miss it.
    double log_miss = 0.0;
    bool certain = false;
    for (double wv : right.values()) {
        const double qu = edge_probability(w_u, wv, sum_right);
        const double q1 = edge_probability(w_u1, wv, sum_right);
        const double q2 = edge_probability(w_u2, wv, sum_right);
        const double factor = qu * (q1 + q2 - q1 * q2);
        if (factor >= 1.0) {
            certain = true;
            break;
        }
        log_miss += std::log1p(-factor);
    }
    const double p_neither = certain ? 0.0 : std::exp(log_miss);
    const double pa1 = p_edge_exact(w_u, w_u1, right);
    const double pa2 = p_edge_exact(w_u, w_u2, right);
    return std::clamp(pa1 + pa2 - 1.0 + p_neither, 0.0, 1.0);
}

double p_triangle_common_neighbor(double w_u, double w_u1, double w_u2,
                                  const WeightSequence& right) {
    const double sum_right = right.sum();
    double log_miss = 0.0;
    for (double wv : right.values()) {
        const double q = edge_probability(w_u, wv, sum_right) *
                         edge_probability(w_u1, wv, sum_right) *
                         edge_probability(w_u2, wv, sum_right);
        if (q >= 1.0) return 1.0;
        log_miss += std::log1p(-q);
    }
    return -std::expm1(log_miss);
}

double mc_triangle_probability(double w_u, double w_u1, double w_u2,
                               const WeightSequence& right, std::uint64_t trials,
                               std::uint64_t seed) {
    if (trials < 1) throw ParameterError("need at least one trial");
    const double sum_right = right.sum();
    Rng rng(seed);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        bool e01 = false, e02 = false, e12 = false;
        for (double wv : right.values()) {
            const bool a = rng.uniform01() < edge_probability(w_u, wv, sum_right);
            const bool b = rng.uniform01() < edge_probability(w_u1, wv, sum_right);
            const bool c = rng.uniform01() < edge_probability(w_u2, wv, sum_right);
            e01 |= a && b;
            e02 |= a && c;
            e12 |= b && c;
        }
        if (e01 && e02 && e12) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(trials);
}

double predict_expected_degree(double w_u, const MomentBundle& mb) {
    return mb.M_R2 * mb.M_L1 / (mb.M_R1 * mb.M_R1) * static_cast<double>(mb.n_left) /
           static_cast<double>(mb.n_right) * w_u;
}

double predict_local_clustering(double w_u, const MomentBundle& mb) {
    if (!(w_u > 0.0)) throw ParameterError("weight must be positive");
    return 1.0 / (1.0 + mb.clustering_ratio() * w_u);
}

double predict_global_clustering(const MomentBundle& mb) {
    return 1.0 / (1.0 + mb.clustering_ratio() * mb.M_L2 / mb.M_L1);
}

double predict_closure(const MomentBundle& mb) { return predict_global_clustering(mb); }

double poisson_pmf(double mean, std::uint64_t k) {
    if (!(mean > 0.0)) throw ParameterError("poisson mean must be positive");
    const auto kd = static_cast<double>(k);
    return std::exp(kd * std::log(mean) - mean - std::lgamma(kd + 1.0));
}

double predicted_projected_exponent(double alpha_left, double alpha_right) {
    if (!(alpha_left > 1.0) || !(alpha_right > 1.0))
        throw ParameterError("decay exponents must exceed 1");
    return std::min(alpha_left, alpha_right - 1.0);
}

}  // namespace biproj
