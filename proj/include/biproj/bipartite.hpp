#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace biproj {

using NodeId = std::uint32_t;
using BipartiteEdge = std::pair<NodeId, NodeId>;

// Simple bipartite graph: left ids in [0, n_left), right ids in [0, n_right),
// edges sorted lexicographically with no duplicates.
struct BipartiteGraph {
    NodeId n_left = 0;
    NodeId n_right = 0;
    std::vector<BipartiteEdge> edges;

    std::size_t num_edges() const { return edges.size(); }

    std::vector<std::uint32_t> left_degrees() const;
    std::vector<std::uint32_t> right_degrees() const;

    // Sorts, deduplicates and range-checks the edge set.
    void normalize();

    // Throws DomainError if an invariant is violated.
    void validate() const;

    // Text edge list: "left_id right_id" per line, 0-indexed, '#' comments.
    void save(std::ostream& out) const;
    void save_file(const std::string& path) const;
    static BipartiteGraph load(std::istream& in);
    static BipartiteGraph load_file(const std::string& path);
};

}  // namespace biproj
