#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "biproj/bipartite.hpp"
#include "biproj/weights.hpp"

namespace biproj {

struct DatasetMeta {
    std::string name;
    std::uint64_t n_left = 0;
    std::uint64_t n_right = 0;
    std::uint64_t n_edges = 0;
    std::string source_path;
};

// A bipartite edge list with its label <-> dense-id mapping.
struct LoadedDataset {
    BipartiteGraph graph;
    DatasetMeta meta;
    std::vector<std::string> left_labels;   // index = left id
    std::vector<std::string> right_labels;  // index = right id
};

// Parses "left_label right_label" lines (whitespace separated, '#' comment
// lines, arbitrary string labels). Labels map to dense 0-based ids per side
// in first-appearance order; duplicate edges collapse. swap_sides permutes
// the two columns before mapping.
LoadedDataset load_bipartite_edgelist(const std::string& path, bool swap_sides = false);
LoadedDataset load_bipartite_edgelist(std::istream& in, const std::string& name,
                                      bool swap_sides = false);

// Sidecar dump of the label mapping: "L <id> <label>" / "R <id> <label>".
void write_label_map(const LoadedDataset& dataset, const std::string& path);

struct DegreeWeights {
    WeightSequence left;
    WeightSequence right;
    std::uint64_t dropped_left = 0;   // isolated nodes excluded from the sequences
    std::uint64_t dropped_right = 0;
};

// Bipartite degrees as integer weight sequences; sum(left) = sum(right) =
// |E_b| by the handshake identity. Isolated nodes are dropped and counted.
DegreeWeights degrees_as_weights(const BipartiteGraph& gb);

}  // namespace biproj
