#include "biproj/projection.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <cstdio>
#include <sstream>

#include "biproj/errors.hpp"

namespace biproj {

ProjectedGraph::ProjectedGraph(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges,
                               std::vector<std::uint32_t> multiplicities)
    : n_(n), edges_(std::move(edges)), multiplicities_(std::move(multiplicities)) {
    if (!multiplicities_.empty() && multiplicities_.size() != edges_.size())
        throw ParameterError("multiplicity vector must parallel the edge list");
    for (const auto& [u, v] : edges_) {
        if (u >= v) throw DomainError("projected edges must satisfy u < v");
        if (v >= n_) throw DomainError("projected edge endpoint out of range");
    }
    if (!std::is_sorted(edges_.begin(), edges_.end()))
        throw DomainError("projected edges must be sorted");
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw DomainError("projected edge set holds duplicates");
    for (std::uint32_t m : multiplicities_)
        if (m < 1) throw DomainError("edge multiplicity must be >= 1");

    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++offsets_[u + 1];
        ++offsets_[v + 1];
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
    neighbors_.resize(edges_.size() * 2);
    std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        neighbors_[cursor[u]++] = v;
        neighbors_[cursor[v]++] = u;
    }
    for (NodeId u = 0; u < n_; ++u)
        std::sort(neighbors_.begin() + offsets_[u], neighbors_.begin() + offsets_[u + 1]);
}

void ProjectedGraph::save(std::ostream& out) const {
    out << "# projected n=" << n_ << " edges=" << edges_.size()
        << (multiplicities_.empty() ? "" : " with_multiplicity") << '\n';
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        out << edges_[i].first << ' ' << edges_[i].second;
        if (!multiplicities_.empty()) out << ' ' << multiplicities_[i];
        out << '\n';
    }
}

void ProjectedGraph::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot open " + path + " for writing");
    save(out);
}

ProjectedGraph ProjectedGraph::load(std::istream& in) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::uint32_t> mults;
    std::string line;
    std::size_t line_no = 0;
    NodeId max_node = 0;
    bool any = false;
    unsigned long long header_n = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            if (first != std::string::npos &&
                std::sscanf(line.c_str() + first, "# projected n=%llu", &header_n) == 1)
                have_header = true;
            continue;
        }
        std::istringstream ls(line);
        std::uint64_t u, v;
        if (!(ls >> u >> v)) throw ParseError("expected 'u v [multiplicity]'", line_no);
        std::uint64_t mult;
        if (ls >> mult) {
            mults.push_back(static_cast<std::uint32_t>(mult));
        } else if (!mults.empty()) {
            throw ParseError("multiplicity column missing", line_no);
        }
        if (u == v) throw ParseError("self-loop in projected edge list", line_no);
        auto a = static_cast<NodeId>(std::min(u, v));
        auto b = static_cast<NodeId>(std::max(u, v));
        edges.emplace_back(a, b);
        max_node = std::max(max_node, b);
        any = true;
    }
    if (!mults.empty() && mults.size() != edges.size())
        throw ParseError("multiplicity column present on some lines only", line_no);
    if (mults.empty()) {
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    } else {
        std::vector<std::size_t> order(edges.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
        std::vector<std::pair<NodeId, NodeId>> se;
        std::vector<std::uint32_t> sm;
        for (std::size_t i : order) {
            if (!se.empty() && se.back() == edges[i]) continue;
            se.push_back(edges[i]);
            sm.push_back(mults[i]);
        }
        edges = std::move(se);
        mults = std::move(sm);
    }
    NodeId n = any ? max_node + 1 : 0;
    if (have_header) n = std::max(n, static_cast<NodeId>(header_n));
    return ProjectedGraph(n, std::move(edges), std::move(mults));
}

ProjectedGraph ProjectedGraph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open " + path);
    return load(in);
}

ProjectedGraph project(const BipartiteGraph& gb, bool keep_multiplicity, std::uint64_t pair_cap) {
    // right-side adjacency in CSR form
    const auto rdeg = gb.right_degrees();
    std::uint64_t work = 0;
    for (std::uint32_t d : rdeg) work += static_cast<std::uint64_t>(d) * d;
    if (work > pair_cap)
        throw SizeError("projection refused: sum of squared right degrees " +
                        std::to_string(work) + " exceeds the guard of " +
                        std::to_string(pair_cap));

    std::vector<std::uint64_t> offsets(static_cast<std::size_t>(gb.n_right) + 1, 0);
    for (std::uint32_t v = 0; v < gb.n_right; ++v) offsets[v + 1] = offsets[v] + rdeg[v];
    std::vector<NodeId> left_of(gb.edges.size());
    {
        std::vector<std::uint64_t> cursor(offsets.begin(), offsets.end() - 1);
        for (const auto& [u, v] : gb.edges) left_of[cursor[v]++] = u;
    }

    // all co-neighbor pairs, canonical (min, max) key, then sort + dedup
    std::vector<std::uint64_t> pairs;
    std::uint64_t total_pairs = 0;
    for (std::uint32_t v = 0; v < gb.n_right; ++v)
        total_pairs += static_cast<std::uint64_t>(rdeg[v]) * (rdeg[v] > 0 ? rdeg[v] - 1 : 0) / 2;
    pairs.reserve(total_pairs);
    for (std::uint32_t v = 0; v < gb.n_right; ++v) {
        const auto begin = offsets[v], end = offsets[v + 1];
        for (auto i = begin; i < end; ++i) {
            for (auto j = i + 1; j < end; ++j) {
                NodeId a = left_of[i], b = left_of[j];
                if (a == b) continue;  // cannot happen on a simple bipartite graph
                if (a > b) std::swap(a, b);
                pairs.push_back((static_cast<std::uint64_t>(a) << 32) | b);
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::uint32_t> mults;
    for (std::size_t i = 0; i < pairs.size();) {
        std::size_t j = i;
        while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
        edges.emplace_back(static_cast<NodeId>(pairs[i] >> 32),
                           static_cast<NodeId>(pairs[i] & 0xffffffffULL));
        if (keep_multiplicity) mults.push_back(static_cast<std::uint32_t>(j - i));
        i = j;
    }
    return ProjectedGraph(gb.n_left, std::move(edges), std::move(mults));
}

double multi_edge_rate(const ProjectedGraph& p) {
    if (p.num_edges() == 0) return 0.0;
    if (!p.has_multiplicities())
        throw UsageError("multi_edge_rate requires a projection built with keep_multiplicity");
    std::uint64_t multi = 0;
    for (std::uint32_t m : p.multiplicities())
        if (m >= 2) ++multi;
    return static_cast<double>(multi) / static_cast<double>(p.num_edges());
}

}  // namespace biproj
