#pragma once

#include <cstdint>

#include "biproj/weights.hpp"

namespace biproj {

// The sequence moments entering the closed-form predictions.
struct MomentBundle {
    std::uint64_t n_left = 0;
    std::uint64_t n_right = 0;
    double M_L1 = 0.0;
    double M_L2 = 0.0;
    double M_R1 = 0.0;
    double M_R2 = 0.0;
    double M_R3 = 0.0;
    double M_R4 = 0.0;

    static MomentBundle from_sequences(const WeightSequence& left, const WeightSequence& right);

    // M_R2^2 / (M_R3 * M_R1), the ratio governing clustering; <= 1 by
    // Cauchy-Schwarz.
    double clustering_ratio() const { return M_R2 * M_R2 / (M_R3 * M_R1); }
};

struct EdgeProbability {
    double first_order = 0.0;  // p = (M_R2 / M_R1^2) * w1 * w2 / n_R
    double corrected = 0.0;    // p - p^2/2 + (p/6 + M_R4/(2 n_R M_R2^2)) p^2
};

// Asymptotic projected-edge probability with its second-order correction.
EdgeProbability p_edge_asymptotic(double w_u1, double w_u2, const MomentBundle& mb);

// Exact model probability that two left nodes share a right neighbor:
// 1 - prod_v (1 - q1(v) q2(v)) with q_i(v) = min(w_i w_v / sum(S_R), 1).
// Computed in log space.
double p_edge_exact(double w_u1, double w_u2, const WeightSequence& right);

// Exact probability that (u, u1) and (u, u2) are both projected edges,
// via P(A1) + P(A2) - 1 + P(no A1 and no A2) with the per-node product
// form for the complement.
double p_wedge_exact(double w_u, double w_u1, double w_u2, const WeightSequence& right);

// Probability that some single right node links to all three left nodes;
// the dominant term of the triangle probability (the 6-cycle remainder is
// of lower order and is not computed).
double p_triangle_common_neighbor(double w_u, double w_u1, double w_u2,
                                  const WeightSequence& right);

// Monte-Carlo estimate of the full triangle probability for three left
// nodes with the given weights; ground truth for checking how small the
// remainder beyond the common-neighbor term is.
double mc_triangle_probability(double w_u, double w_u1, double w_u2,
                               const WeightSequence& right, std::uint64_t trials,
                               std::uint64_t seed);

// (M_R2 M_L1 / M_R1^2) * (n_L / n_R) * w_u
double predict_expected_degree(double w_u, const MomentBundle& mb);

// 1 / (1 + clustering_ratio * w_u)
double predict_local_clustering(double w_u, const MomentBundle& mb);

// 1 / (1 + clustering_ratio * M_L2 / M_L1)
double predict_global_clustering(const MomentBundle& mb);

// Equal to predict_global_clustering: closure is weight-independent.
double predict_closure(const MomentBundle& mb);

// e^-mean mean^k / k!, evaluated in log space.
double poisson_pmf(double mean, std::uint64_t k);

// min(alpha_L, alpha_R - 1), the projected-degree decay exponent.
double predicted_projected_exponent(double alpha_left, double alpha_right);

}  // namespace biproj
