#include "biproj/ingest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "biproj/errors.hpp"

namespace biproj {

LoadedDataset load_bipartite_edgelist(std::istream& in, const std::string& name,
                                      bool swap_sides) {
    LoadedDataset ds;
    ds.meta.name = name;

    std::unordered_map<std::string, NodeId> left_ids, right_ids;
    auto intern = [](std::unordered_map<std::string, NodeId>& ids, std::vector<std::string>& labels,
                     const std::string& label) {
        auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b)) throw ParseError("expected 'left_label right_label'", line_no);
        if (ls >> extra) throw ParseError("unexpected trailing token '" + extra + "'", line_no);
        if (swap_sides) std::swap(a, b);
        const NodeId u = intern(left_ids, ds.left_labels, a);
        const NodeId v = intern(right_ids, ds.right_labels, b);
        ds.graph.edges.emplace_back(u, v);
    }
    if (ds.graph.edges.empty()) throw DomainError("edge list file holds no edges: " + name);

    ds.graph.n_left = static_cast<NodeId>(ds.left_labels.size());
    ds.graph.n_right = static_cast<NodeId>(ds.right_labels.size());
    ds.graph.normalize();  // drops duplicate input lines

    ds.meta.n_left = ds.graph.n_left;
    ds.meta.n_right = ds.graph.n_right;
    ds.meta.n_edges = ds.graph.num_edges();
    return ds;
}

LoadedDataset load_bipartite_edgelist(const std::string& path, bool swap_sides) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open " + path);
    auto ds = load_bipartite_edgelist(in, std::filesystem::path(path).stem().string(), swap_sides);
    ds.meta.source_path = path;
    return ds;
}

void write_label_map(const LoadedDataset& dataset, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open " + path + " for writing");
    out << "# side id label\n";
    for (std::size_t i = 0; i < dataset.left_labels.size(); ++i)
        out << "L " << i << ' ' << dataset.left_labels[i] << '\n';
    for (std::size_t i = 0; i < dataset.right_labels.size(); ++i)
        out << "R " << i << ' ' << dataset.right_labels[i] << '\n';
}

DegreeWeights degrees_as_weights(const BipartiteGraph& gb) {
    if (gb.edges.empty()) throw DomainError("cannot derive weights from an empty graph");
    auto collect = [](const std::vector<std::uint32_t>& degrees, Side side,
                      std::uint64_t& dropped) {
        std::vector<double> values;
        values.reserve(degrees.size());
        dropped = 0;
        for (std::uint32_t d : degrees) {
            if (d == 0) {
                ++dropped;  // zero-weight nodes never form edges
            } else {
                values.push_back(static_cast<double>(d));
            }
        }
        return WeightSequence(side, std::move(values));
    };
    std::uint64_t dropped_left = 0, dropped_right = 0;
    WeightSequence left = collect(gb.left_degrees(), Side::Left, dropped_left);
    WeightSequence right = collect(gb.right_degrees(), Side::Right, dropped_right);
    return DegreeWeights{std::move(left), std::move(right), dropped_left, dropped_right};
}

}  // namespace biproj
