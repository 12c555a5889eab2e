#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "biproj/projection.hpp"
#include "biproj/weights.hpp"

namespace biproj {

// Per-node counts on a simple graph.
//   degree[u]      d(u)
//   triangles[u]   T(u), triangles containing u
//   wedges[u]      d(u)(d(u)-1)/2, wedges centered at u
//   two_paths[u]   W_h(u) = sum_{v in N(u)} (d(v)-1), 2-paths leaving u
struct GraphStats {
    std::vector<std::uint32_t> degree;
    std::vector<std::uint64_t> triangles;
    std::vector<std::uint64_t> wedges;
    std::vector<std::uint64_t> two_paths;

    std::size_t num_nodes() const { return degree.size(); }
    std::uint64_t total_triangles() const;  // sum T(u) / 3
    std::uint64_t total_wedges() const;
};

// Exact per-node triangle counts via degree-ordered adjacency intersection;
// fills all other count fields as well.
GraphStats count_triangles(const ProjectedGraph& p);

// 2T(u) / (d(u)(d(u)-1)); empty when d(u) < 2.
std::optional<double> local_clustering(const GraphStats& stats, NodeId u);

// 2T(u) / W_h(u); empty when W_h(u) = 0.
std::optional<double> local_closure(const GraphStats& stats, NodeId u);

// sum 2T(u) / sum d(u)(d(u)-1); empty when the graph has no wedge.
std::optional<double> global_clustering(const GraphStats& stats);

struct CoefficientReport {
    double mean_local_clustering = 0.0;
    double global_clustering = 0.0;
    double mean_local_closure = 0.0;
    std::uint64_t defined_clustering_nodes = 0;
    std::uint64_t defined_closure_nodes = 0;

    bool empty() const { return defined_clustering_nodes == 0 && defined_closure_nodes == 0; }
};

// Means over nodes with a defined coefficient only.
CoefficientReport coefficient_report(const GraphStats& stats);
CoefficientReport coefficient_report(const ProjectedGraph& p);

enum class CoefficientMode { Clustering, Closure };

struct CoefficientBin {
    double value = 0.0;
    std::uint64_t n_nodes = 0;
};

// Wedge-weighted per-bin coefficient, one bin per distinct node weight:
//   clustering: sum T(u) / sum wedges(u)
//   closure:    sum T(u) / sum (W_h(u)/2)
// Bins with zero denominator are omitted; bins with fewer than
// min_bin_size nodes are omitted when min_bin_size > 0.
std::map<double, CoefficientBin> weight_binned_conditional(const GraphStats& stats,
                                                           const WeightSequence& weights,
                                                           CoefficientMode mode,
                                                           std::uint64_t min_bin_size = 0);

// Same estimator binned by exact degree instead of weight.
std::map<std::uint32_t, CoefficientBin> degree_binned_coefficient(const GraphStats& stats,
                                                                  CoefficientMode mode,
                                                                  std::uint64_t min_bin_size = 0);

}  // namespace biproj
