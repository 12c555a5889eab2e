#include "biproj/bipartite.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <cstdio>
#include <sstream>

#include "biproj/errors.hpp"

namespace biproj {

std::vector<std::uint32_t> BipartiteGraph::left_degrees() const {
    std::vector<std::uint32_t> deg(n_left, 0);
    for (const auto& [u, v] : edges) ++deg[u];
    return deg;
}

std::vector<std::uint32_t> BipartiteGraph::right_degrees() const {
    std::vector<std::uint32_t> deg(n_right, 0);
    for (const auto& [u, v] : edges) ++deg[v];
    return deg;
}

void BipartiteGraph::normalize() {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    validate();
}

void BipartiteGraph::validate() const {
    for (const auto& [u, v] : edges) {
        if (u >= n_left || v >= n_right)
            throw DomainError("bipartite edge endpoint out of range");
    }
    if (!std::is_sorted(edges.begin(), edges.end()))
        throw DomainError("bipartite edges must be sorted");
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw DomainError("bipartite edge set holds duplicates");
}

void BipartiteGraph::save(std::ostream& out) const {
    out << "# bipartite n_left=" << n_left << " n_right=" << n_right
        << " edges=" << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

void BipartiteGraph::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open " + path + " for writing");
    save(out);
}

BipartiteGraph BipartiteGraph::load(std::istream& in) {
    BipartiteGraph g;
    std::string line;
    std::size_t line_no = 0;
    NodeId max_left = 0, max_right = 0;
    bool saw_edge = false;
    unsigned long long header_left = 0, header_right = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            // our own files carry the exact node counts in the header, which
            // preserves isolated trailing nodes across a round trip
            if (first != std::string::npos &&
                std::sscanf(line.c_str() + first, "# bipartite n_left=%llu n_right=%llu",
                            &header_left, &header_right) == 2)
                have_header = true;
            continue;
        }
        std::istringstream ls(line);
        std::uint64_t u, v;
        if (!(ls >> u >> v)) throw ParseError("expected 'left_id right_id'", line_no);
        std::string extra;
        if (ls >> extra) throw ParseError("unexpected trailing token '" + extra + "'", line_no);
        if (u > 0xffffffffULL || v > 0xffffffffULL)
            throw ParseError("node id exceeds 32-bit range", line_no);
        g.edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        max_left = std::max(max_left, static_cast<NodeId>(u));
        max_right = std::max(max_right, static_cast<NodeId>(v));
        saw_edge = true;
    }
    if (saw_edge) {
        g.n_left = max_left + 1;
        g.n_right = max_right + 1;
    }
    if (have_header) {
        g.n_left = std::max(g.n_left, static_cast<NodeId>(header_left));
        g.n_right = std::max(g.n_right, static_cast<NodeId>(header_right));
    }
    g.normalize();
    return g;
}

BipartiteGraph BipartiteGraph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open " + path);
    return load(in);
}

}  // namespace biproj
