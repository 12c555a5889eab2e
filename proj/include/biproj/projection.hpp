#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "biproj/bipartite.hpp"

namespace biproj {

// Simple undirected graph on the left nodes of a bipartite graph.
// Edges are stored once with u < v, in sorted order; adjacency is CSR.
class ProjectedGraph {
  public:
    ProjectedGraph() = default;

    // edges must be unique, with first < second, sorted.
    // multiplicities, when nonempty, runs parallel to edges and holds the
    // number of shared right neighbors N_{uv} of each edge.
    ProjectedGraph(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges,
                   std::vector<std::uint32_t> multiplicities = {});

    NodeId num_nodes() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

    bool has_multiplicities() const { return !multiplicities_.empty() || edges_.empty(); }
    const std::vector<std::uint32_t>& multiplicities() const { return multiplicities_; }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
    }
    std::uint32_t degree(NodeId u) const {
        return static_cast<std::uint32_t>(offsets_[u + 1] - offsets_[u]);
    }

    // "u v" per line with u < v; third column = multiplicity when present.
    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    static ProjectedGraph load(std::istream& in);
    static ProjectedGraph load_file(const std::string& path);

  private:
    NodeId n_ = 0;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<std::uint32_t> multiplicities_;
    std::vector<std::uint64_t> offsets_;
    std::vector<NodeId> neighbors_;
};

// One-mode projection onto the left nodes: u1 ~ u2 iff they share at least
// one right neighbor. Runs in O(sum_v d_b(v)^2) by linking all pairs inside
// each right neighborhood; pair_cap guards that sum (SizeError beyond it).
ProjectedGraph project(const BipartiteGraph& gb, bool keep_multiplicity = false,
                       std::uint64_t pair_cap = 2'000'000'000ULL);

// Fraction of projected edges whose endpoints share >= 2 right neighbors.
// Requires a projection built with keep_multiplicity; 0.0 on an edgeless graph.
double multi_edge_rate(const ProjectedGraph& p);

}  // namespace biproj
