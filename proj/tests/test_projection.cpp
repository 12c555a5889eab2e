#include <doctest.h>

#include <cmath>
#include <sstream>

#include "biproj/errors.hpp"
#include "biproj/projection.hpp"
#include "biproj/sampler.hpp"
#include "oracles.hpp"

using namespace biproj;

namespace {

BipartiteGraph make_bipartite(NodeId nl, NodeId nr, std::vector<BipartiteEdge> edges) {
    BipartiteGraph g;
    g.n_left = nl;
    g.n_right = nr;
    g.edges = std::move(edges);
    g.normalize();
    return g;
}

}  // namespace

TEST_CASE("projection from the definition") {
    auto g = make_bipartite(3, 2, {{0, 0}, {1, 0}, {1, 1}, {2, 1}});
    auto p = project(g);
    CHECK(p.num_nodes() == 3);
    CHECK(p.edges() == std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {1, 2}});
}

TEST_CASE("empty bipartite graph projects to an empty graph") {
    auto p = project(make_bipartite(4, 3, {}));
    CHECK(p.num_nodes() == 4);
    CHECK(p.num_edges() == 0);
}

TEST_CASE("shared right neighbors collapse to one edge with multiplicity") {
    auto g = make_bipartite(2, 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto p = project(g, true);
    CHECK(p.num_edges() == 1);
    CHECK(p.edges()[0] == std::pair<NodeId, NodeId>{0, 1});
    CHECK(p.multiplicities()[0] == 2);
    CHECK(multi_edge_rate(p) == doctest::Approx(1.0));
}

TEST_CASE("multi-edge rate is zero when right degrees are at most one") {
    auto g = make_bipartite(3, 3, {{0, 0}, {1, 1}, {2, 2}});
    auto p = project(g, true);
    CHECK(p.num_edges() == 0);
    CHECK(multi_edge_rate(p) == doctest::Approx(0.0));
}

TEST_CASE("multi_edge_rate demands multiplicities") {
    auto g = make_bipartite(2, 1, {{0, 0}, {1, 0}});
    auto p = project(g, false);
    CHECK_THROWS_AS(multi_edge_rate(p), UsageError);
}

TEST_CASE("projection matches the brute-force pairwise oracle") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto tiny = oracles::random_tiny_instance(5000 + seed, 30);
        WeightSequence sl(Side::Left, tiny.left), sr(Side::Right, tiny.right);
        auto g = sample_naive(sl, sr, seed);
        auto p = project(g, true);
        auto expected = oracles::brute_force_projection(g);
        REQUIRE(p.num_edges() == expected.size());
        for (const auto& e : p.edges()) CHECK(expected.count(e) == 1);
        for (std::uint32_t m : p.multiplicities()) CHECK(m >= 1);
    }
}

TEST_CASE("projection is a pure function of its input") {
    auto tiny = oracles::random_tiny_instance(42, 12);
    WeightSequence sl(Side::Left, tiny.left), sr(Side::Right, tiny.right);
    auto g = sample_naive(sl, sr, 4);
    auto p1 = project(g, true);
    auto p2 = project(g, true);
    CHECK(p1.edges() == p2.edges());
    CHECK(p1.multiplicities() == p2.multiplicities());
}

TEST_CASE("pair-count guard refuses oversized right neighborhoods") {
    std::vector<BipartiteEdge> edges;
    for (NodeId u = 0; u < 100; ++u) edges.push_back({u, 0});
    auto g = make_bipartite(100, 1, std::move(edges));
    CHECK_THROWS_AS(project(g, false, 9'999), SizeError);
    CHECK(project(g, false, 10'000).num_edges() == 100 * 99 / 2);
}

TEST_CASE("round trips preserve node counts with isolated trailing nodes") {
    auto g = make_bipartite(5, 4, {{0, 0}, {1, 0}});  // nodes 2..4 isolated
    std::stringstream ss;
    g.save(ss);
    auto loaded = BipartiteGraph::load(ss);
    CHECK(loaded.n_left == 5);
    CHECK(loaded.n_right == 4);

    auto p = project(g);
    std::stringstream ps;
    p.save(ps);
    auto ploaded = ProjectedGraph::load(ps);
    CHECK(ploaded.num_nodes() == 5);
    CHECK(ploaded.edges() == p.edges());
}

TEST_CASE("projected edge list round trip with multiplicities") {
    auto g = make_bipartite(3, 2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 1}});
    auto p = project(g, true);
    std::stringstream ss;
    p.save(ss);
    auto loaded = ProjectedGraph::load(ss);
    CHECK(loaded.edges() == p.edges());
    CHECK(loaded.multiplicities() == p.multiplicities());
}

TEST_CASE("projection multi-edge rate fades on model samples") {
    auto run = [](std::size_t n) {
        const double wmax = std::floor(std::pow(static_cast<double>(n), 0.3));
        auto sl = sample_power_law({2.5, 1, wmax, true}, n, 61, Side::Left);
        auto sr = sample_power_law({2.5, 1, wmax, true}, n, 62, Side::Right);
        return multi_edge_rate(project(sample_fast(sl, sr, 63), true));
    };
    const double small_rate = run(10'000);
    const double big_rate = run(100'000);
    CHECK(big_rate < 0.05);
    CHECK(big_rate < small_rate);
}
