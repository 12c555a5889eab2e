#include "biproj/graph_stats.hpp"

#include <algorithm>
#include <numeric>

#include "biproj/errors.hpp"

namespace biproj {

std::uint64_t GraphStats::total_triangles() const {
    return std::accumulate(triangles.begin(), triangles.end(), std::uint64_t{0}) / 3;
}

std::uint64_t GraphStats::total_wedges() const {
    return std::accumulate(wedges.begin(), wedges.end(), std::uint64_t{0});
}

GraphStats count_triangles(const ProjectedGraph& p) {
    const NodeId n = p.num_nodes();
    GraphStats stats;
    stats.degree.resize(n);
    stats.triangles.assign(n, 0);
    stats.wedges.resize(n);
    stats.two_paths.assign(n, 0);
    for (NodeId u = 0; u < n; ++u) {
        const std::uint64_t d = p.degree(u);
        stats.degree[u] = static_cast<std::uint32_t>(d);
        stats.wedges[u] = d * (d - (d > 0 ? 1 : 0)) / 2;
    }
    for (NodeId u = 0; u < n; ++u) {
        std::uint64_t paths = 0;
        for (NodeId v : p.neighbors(u)) paths += stats.degree[v] - 1;
        stats.two_paths[u] = paths;
    }

    // Orient each edge from the lower-rank endpoint (degree, then id) and
    // intersect out-neighborhoods; each triangle shows up exactly once.
    auto rank_less = [&stats](NodeId a, NodeId b) {
        return stats.degree[a] != stats.degree[b] ? stats.degree[a] < stats.degree[b] : a < b;
    };
    std::vector<std::uint64_t> out_offsets(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [u, v] : p.edges()) ++out_offsets[(rank_less(u, v) ? u : v) + 1];
    for (std::size_t i = 1; i < out_offsets.size(); ++i) out_offsets[i] += out_offsets[i - 1];
    std::vector<NodeId> out_neighbors(p.num_edges());
    {
        std::vector<std::uint64_t> cursor(out_offsets.begin(), out_offsets.end() - 1);
        for (const auto& [u, v] : p.edges()) {
            if (rank_less(u, v))
                out_neighbors[cursor[u]++] = v;
            else
                out_neighbors[cursor[v]++] = u;
        }
    }
    for (NodeId u = 0; u < n; ++u)
        std::sort(out_neighbors.begin() + out_offsets[u], out_neighbors.begin() + out_offsets[u + 1]);

    for (NodeId u = 0; u < n; ++u) {
        const auto u_begin = out_offsets[u], u_end = out_offsets[u + 1];
        for (auto i = u_begin; i < u_end; ++i) {
            const NodeId v = out_neighbors[i];
            auto a = u_begin;
            auto b = out_offsets[v];
            const auto b_end = out_offsets[v + 1];
            while (a < u_end && b < b_end) {
                if (out_neighbors[a] < out_neighbors[b]) {
                    ++a;
                } else if (out_neighbors[a] > out_neighbors[b]) {
                    ++b;
                } else {
                    const NodeId w = out_neighbors[a];
                    ++stats.triangles[u];
                    ++stats.triangles[v];
                    ++stats.triangles[w];
                    ++a;
                    ++b;
                }
            }
        }
    }
    return stats;
}

std::optional<double> local_clustering(const GraphStats& stats, NodeId u) {
    if (stats.degree[u] < 2) return std::nullopt;
    const double d = stats.degree[u];
    return 2.0 * static_cast<double>(stats.triangles[u]) / (d * (d - 1.0));
}

std::optional<double> local_closure(const GraphStats& stats, NodeId u) {
    if (stats.two_paths[u] == 0) return std::nullopt;
    return 2.0 * static_cast<double>(stats.triangles[u]) /
           static_cast<double>(stats.two_paths[u]);
}

std::optional<double> global_clustering(const GraphStats& stats) {
    std::uint64_t tri = 0, wed = 0;
    for (std::size_t u = 0; u < stats.num_nodes(); ++u) {
        tri += stats.triangles[u];
        wed += 2 * stats.wedges[u];
    }
    if (wed == 0) return std::nullopt;
    return 2.0 * static_cast<double>(tri) / static_cast<double>(wed);
}

CoefficientReport coefficient_report(const GraphStats& stats) {
    CoefficientReport report;
    double clust_sum = 0.0, closure_sum = 0.0;
    for (NodeId u = 0; u < stats.num_nodes(); ++u) {
        if (auto c = local_clustering(stats, u)) {
            clust_sum += *c;
            ++report.defined_clustering_nodes;
        }
        if (auto h = local_closure(stats, u)) {
            closure_sum += *h;
            ++report.defined_closure_nodes;
        }
    }
    if (report.defined_clustering_nodes > 0)
        report.mean_local_clustering = clust_sum / static_cast<double>(report.defined_clustering_nodes);
    if (report.defined_closure_nodes > 0)
        report.mean_local_closure = closure_sum / static_cast<double>(report.defined_closure_nodes);
    report.global_clustering = global_clustering(stats).value_or(0.0);
    return report;
}

CoefficientReport coefficient_report(const ProjectedGraph& p) {
    return coefficient_report(count_triangles(p));
}

namespace {

template <typename Key>
std::map<Key, CoefficientBin> binned_coefficient(const GraphStats& stats, CoefficientMode mode,
                                                 std::uint64_t min_bin_size,
                                                 const std::vector<Key>& key_of) {
    struct Accum {
        std::uint64_t triangles = 0;
        std::uint64_t denom = 0;  // wedges, or 2-paths for closure
        std::uint64_t n_nodes = 0;
    };
    std::map<Key, Accum> acc;
    for (NodeId u = 0; u < stats.num_nodes(); ++u) {
        Accum& a = acc[key_of[u]];
        a.triangles += stats.triangles[u];
        a.denom += mode == CoefficientMode::Clustering ? stats.wedges[u] : stats.two_paths[u];
        ++a.n_nodes;
    }
    std::map<Key, CoefficientBin> out;
    for (const auto& [key, a] : acc) {
        if (a.denom == 0) continue;
        if (min_bin_size > 0 && a.n_nodes < min_bin_size) continue;
        const double denom = mode == CoefficientMode::Clustering
                                 ? static_cast<double>(a.denom)
                                 : static_cast<double>(a.denom) / 2.0;
        out[key] = {static_cast<double>(a.triangles) / denom, a.n_nodes};
    }
    return out;
}

}  // namespace

std::map<double, CoefficientBin> weight_binned_conditional(const GraphStats& stats,
                                                           const WeightSequence& weights,
                                                           CoefficientMode mode,
                                                           std::uint64_t min_bin_size) {
    if (weights.size() != stats.num_nodes())
        throw ParameterError("weight sequence length must match the node count");
    return binned_coefficient<double>(stats, mode, min_bin_size, weights.values());
}

std::map<std::uint32_t, CoefficientBin> degree_binned_coefficient(const GraphStats& stats,
                                                                  CoefficientMode mode,
                                                                  std::uint64_t min_bin_size) {
    return binned_coefficient<std::uint32_t>(stats, mode, min_bin_size, stats.degree);
}

}  // namespace biproj
