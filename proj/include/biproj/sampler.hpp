#pragma once

#include <cstdint>
#include <vector>

#include "biproj/bipartite.hpp"
#include "biproj/weights.hpp"

namespace biproj {

// Edge probability of the bipartite model: min(w_u * w_v / sum(S_R), 1).
double edge_probability(double w_left, double w_right, double right_weight_sum);

// Reference sampler: one coin flip per (left, right) pair.
// max_pairs guards the O(n_L * n_R) cost; throws SizeError beyond it.
BipartiteGraph sample_naive(const WeightSequence& left, const WeightSequence& right,
                            std::uint64_t seed, std::uint64_t max_pairs = 2'000'000'000ULL);

// One group pair of the grouped sampler: all left nodes of weight w_left
// crossed with all right nodes of weight w_right share the edge
// probability p, so the edge count is Binomial(m, p).
struct GroupPair {
    double w_left = 0.0;
    double w_right = 0.0;
    std::vector<NodeId> members_left;
    std::vector<NodeId> members_right;
    std::uint64_t m = 0;   // |members_left| * |members_right|
    double p = 0.0;        // min(w_left * w_right / right_weight_sum, 1)
};

GroupPair make_group_pair(double w_left, double w_right, std::vector<NodeId> members_left,
                          std::vector<NodeId> members_right, double right_weight_sum);

// Draws e ~ Binomial(m, p) distinct pairs uniformly from the virtual
// product space members_left x members_right without materializing it.
std::vector<BipartiteEdge> sample_group_edges(const GroupPair& group, std::uint64_t seed);

// Grouped sampler with marginal edge distribution identical to
// sample_naive; requires integer-valued weights. Each group pair draws
// from a substream derived from (seed, w_left, w_right).
BipartiteGraph sample_fast(const WeightSequence& left, const WeightSequence& right,
                           std::uint64_t seed);

// Baseline: left node u picks w_u distinct right neighbors uniformly,
// independently across left nodes. Weights are interpreted as exact left
// degrees and must be integers <= n_right.
BipartiteGraph sample_random_intersection(const WeightSequence& left_degrees, NodeId n_right,
                                          std::uint64_t seed);

}  // namespace biproj
