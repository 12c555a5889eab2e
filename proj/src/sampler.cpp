#include "biproj/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <unordered_set>

#include "biproj/errors.hpp"
#include "biproj/rng.hpp"

namespace biproj {

double edge_probability(double w_left, double w_right, double right_weight_sum) {
    return std::min(w_left * w_right / right_weight_sum, 1.0);
}

namespace {

void require_sides(const WeightSequence& left, const WeightSequence& right) {
    if (left.side() != Side::Left || right.side() != Side::Right)
        throw ParameterError("samplers expect a Left and a Right sequence, in that order");
}

// Appends `count` distinct indices, uniform over subsets of [0, m), to out.
// Picks the strategy by count/m; every path is exact and O(count) expected
// (complement path is O(m) but only runs when count > m/2).
template <typename Engine>
void sample_distinct_indices(BasicRng<Engine>& rng, std::uint64_t m, std::uint64_t count,
                             std::vector<std::uint64_t>& out) {
    if (count == 0) return;
    if (count == m) {
        for (std::uint64_t i = 0; i < m; ++i) out.push_back(i);
        return;
    }
    if (count <= 64 && count * 4 <= m) {
        // sequential draws, rejecting duplicates by linear scan
        const std::size_t base = out.size();
        for (std::uint64_t k = 0; k < count; ++k) {
            std::uint64_t x;
            bool fresh;
            do {
                x = rng.below(m);
                fresh = std::find(out.begin() + base, out.end(), x) == out.end();
            } while (!fresh);
            out.push_back(x);
        }
        return;
    }
    if (count > m / 2) {
        // sample the complement instead
        std::vector<std::uint64_t> excluded;
        excluded.reserve(m - count);
        sample_distinct_indices(rng, m, m - count, excluded);
        std::sort(excluded.begin(), excluded.end());
        std::size_t e = 0;
        for (std::uint64_t i = 0; i < m; ++i) {
            if (e < excluded.size() && excluded[e] == i) {
                ++e;
            } else {
                out.push_back(i);
            }
        }
        return;
    }
    // Floyd's sampling
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(count * 2);
    for (std::uint64_t j = m - count; j < m; ++j) {
        const std::uint64_t t = rng.below(j + 1);
        if (!chosen.insert(t).second) chosen.insert(j);
    }
    for (std::uint64_t index : chosen) out.push_back(index);
}

// Core of one group pair: e ~ Binomial(m, p) distinct pairs from the
// virtual product space, appended to edges.
void sample_group_edges_into(std::span<const NodeId> members_left,
                             std::span<const NodeId> members_right, double p, std::uint64_t seed,
                             std::vector<BipartiteEdge>& edges,
                             std::vector<std::uint64_t>& index_scratch) {
    const std::uint64_t m = static_cast<std::uint64_t>(members_left.size()) * members_right.size();
    if (m == 0 || p <= 0.0) return;
    StreamRng rng(seed);
    const std::uint64_t count =
        p >= 1.0 ? m
                 : static_cast<std::uint64_t>(rng.binomial(static_cast<std::int64_t>(m), p));
    index_scratch.clear();
    sample_distinct_indices(rng, m, count, index_scratch);
    const std::uint64_t wide = members_right.size();
    for (std::uint64_t index : index_scratch)
        edges.emplace_back(members_left[index / wide], members_right[index % wide]);
}

}  // namespace

BipartiteGraph sample_naive(const WeightSequence& left, const WeightSequence& right,
                            std::uint64_t seed, std::uint64_t max_pairs) {
    require_sides(left, right);
    const std::uint64_t n_left = left.size();
    const std::uint64_t n_right = right.size();
    const auto pairs = static_cast<__uint128_t>(n_left) * n_right;
    if (pairs > max_pairs)
        throw SizeError("naive sampler refused: pair count exceeds the guard of " +
                        std::to_string(max_pairs));

    const double sum_right = right.sum();
    Rng rng(seed);
    BipartiteGraph g;
    g.n_left = static_cast<NodeId>(n_left);
    g.n_right = static_cast<NodeId>(n_right);
    for (NodeId u = 0; u < n_left; ++u) {
        const double wu = left.values()[u];
        for (NodeId v = 0; v < n_right; ++v) {
            const double p = edge_probability(wu, right.values()[v], sum_right);
            if (rng.uniform01() < p) g.edges.emplace_back(u, v);
        }
    }
    // generated in lexicographic order already
    g.validate();
    return g;
}

GroupPair make_group_pair(double w_left, double w_right, std::vector<NodeId> members_left,
                          std::vector<NodeId> members_right, double right_weight_sum) {
    GroupPair gp;
    gp.w_left = w_left;
    gp.w_right = w_right;
    gp.members_left = std::move(members_left);
    gp.members_right = std::move(members_right);
    gp.m = static_cast<std::uint64_t>(gp.members_left.size()) * gp.members_right.size();
    gp.p = edge_probability(w_left, w_right, right_weight_sum);
    return gp;
}

std::vector<BipartiteEdge> sample_group_edges(const GroupPair& group, std::uint64_t seed) {
    std::vector<BipartiteEdge> out;
    std::vector<std::uint64_t> scratch;
    sample_group_edges_into(group.members_left, group.members_right, group.p, seed, out, scratch);
    return out;
}

BipartiteGraph sample_fast(const WeightSequence& left, const WeightSequence& right,
                           std::uint64_t seed) {
    require_sides(left, right);
    if (!left.integer_valued() || !right.integer_valued())
        throw ParameterError(
            "grouped sampler requires integer weights; use sample_naive for continuous weights");

    // Group node ids by weight, groups sorted by weight value.
    auto group_by_weight = [](const WeightSequence& seq) {
        std::vector<std::pair<std::uint64_t, NodeId>> order(seq.size());
        for (std::size_t i = 0; i < seq.size(); ++i)
            order[i] = {static_cast<std::uint64_t>(seq.values()[i]), static_cast<NodeId>(i)};
        std::sort(order.begin(), order.end());
        std::vector<std::uint64_t> weights;
        std::vector<std::vector<NodeId>> members;
        for (const auto& [w, id] : order) {
            if (weights.empty() || weights.back() != w) {
                weights.push_back(w);
                members.emplace_back();
            }
            members.back().push_back(id);
        }
        return std::make_pair(std::move(weights), std::move(members));
    };
    const auto [left_weights, left_members] = group_by_weight(left);
    const auto [right_weights, right_members] = group_by_weight(right);
    const double sum_right = right.sum();

    BipartiteGraph g;
    g.n_left = static_cast<NodeId>(left.size());
    g.n_right = static_cast<NodeId>(right.size());
    std::vector<std::uint64_t> scratch;
    for (std::size_t a = 0; a < left_weights.size(); ++a) {
        for (std::size_t b = 0; b < right_weights.size(); ++b) {
            const double p = edge_probability(static_cast<double>(left_weights[a]),
                                              static_cast<double>(right_weights[b]), sum_right);
            // substream keyed on the weight pair, independent of loop order
            const std::uint64_t stream = mix_seed(mix_seed(seed, left_weights[a]),
                                                  right_weights[b]);
            sample_group_edges_into(left_members[a], right_members[b], p, stream, g.edges,
                                    scratch);
        }
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.validate();
    return g;
}

BipartiteGraph sample_random_intersection(const WeightSequence& left_degrees, NodeId n_right,
                                          std::uint64_t seed) {
    if (!left_degrees.integer_valued())
        throw ParameterError("random intersection model requires integer left degrees");
    if (left_degrees.max_value() > static_cast<double>(n_right))
        throw ParameterError("left degree exceeds n_right");

    Rng rng(seed);
    BipartiteGraph g;
    g.n_left = static_cast<NodeId>(left_degrees.size());
    g.n_right = n_right;
    std::vector<std::uint64_t> scratch;
    for (NodeId u = 0; u < g.n_left; ++u) {
        const auto k = static_cast<std::uint64_t>(left_degrees.values()[u]);
        scratch.clear();
        sample_distinct_indices(rng, n_right, k, scratch);
        for (std::uint64_t v : scratch) g.edges.emplace_back(u, static_cast<NodeId>(v));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.validate();
    return g;
}

}  // namespace biproj
