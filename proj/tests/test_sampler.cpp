#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

#include "biproj/errors.hpp"
#include "biproj/rng.hpp"
#include "biproj/sampler.hpp"
#include "biproj/theory.hpp"
#include "oracles.hpp"

using namespace biproj;

TEST_CASE("forced edge when p = 1") {
    WeightSequence sl(Side::Left, {1}), sr(Side::Right, {1});
    auto g = sample_naive(sl, sr, 9);
    CHECK(g.num_edges() == 1);
    CHECK(g.edges[0] == BipartiteEdge{0, 0});
}

TEST_CASE("naive sampler hits the binomial mean on the 2x2 all-ones instance") {
    WeightSequence sl(Side::Left, {1, 1}), sr(Side::Right, {1, 1});
    const int trials = 100'000;
    std::uint64_t total = 0;
    for (int t = 0; t < trials; ++t) total += sample_naive(sl, sr, 100 + t).num_edges();
    const double mean = static_cast<double>(total) / trials;
    // per trial the count is Binomial(4, 1/2): mean 2, sd 1
    const double se = 1.0 / std::sqrt(static_cast<double>(trials));
    CHECK(std::abs(mean - 2.0) < 3.0 * se);
}

TEST_CASE("min-capping in the naive sampler") {
    WeightSequence sl(Side::Left, {2}), sr(Side::Right, {3, 1});
    // sum(S_R) = 4: p(v0) = min(6/4, 1) = 1, p(v1) = 1/2
    const int trials = 20'000;
    int v0 = 0, v1 = 0;
    for (int t = 0; t < trials; ++t) {
        auto g = sample_naive(sl, sr, 500 + t);
        for (const auto& [u, v] : g.edges) (v == 0 ? v0 : v1)++;
    }
    CHECK(v0 == trials);
    const double f1 = static_cast<double>(v1) / trials;
    CHECK(std::abs(f1 - 0.5) < 4.0 * std::sqrt(0.25 / trials));
}

TEST_CASE("naive sampler refuses beyond the pair guard") {
    WeightSequence sl(Side::Left, std::vector<double>(100, 1.0));
    WeightSequence sr(Side::Right, std::vector<double>(100, 1.0));
    CHECK_THROWS_AS(sample_naive(sl, sr, 1, 9'999), SizeError);
}

TEST_CASE("samplers demand correctly tagged sides") {
    WeightSequence sl(Side::Left, {1}), sr(Side::Right, {1});
    CHECK_THROWS_AS(sample_naive(sr, sl, 1), ParameterError);
    CHECK_THROWS_AS(sample_fast(sr, sl, 1), ParameterError);
}

TEST_CASE("fast sampler rejects non-integer weights") {
    WeightSequence sl(Side::Left, {1.5, 2}), sr(Side::Right, {1, 1});
    CHECK_THROWS_AS(sample_fast(sl, sr, 1), ParameterError);
}

TEST_CASE("single all-ones group has expected edge count n") {
    const std::size_t n = 2000;
    WeightSequence sl(Side::Left, std::vector<double>(n, 1.0));
    WeightSequence sr(Side::Right, std::vector<double>(n, 1.0));
    // one group pair with m = n^2, p = 1/n; average a few runs
    double total = 0.0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t)
        total += static_cast<double>(sample_fast(sl, sr, 40 + t).num_edges());
    const double mean = total / trials;
    const double sd_per_trial = std::sqrt(static_cast<double>(n));  // binomial sd ~ sqrt(n)
    CHECK(std::abs(mean - static_cast<double>(n)) < 4.0 * sd_per_trial / std::sqrt(trials));
}

TEST_CASE("capped group pair always produces its edge") {
    WeightSequence sl(Side::Left, {1, 1, 2}), sr(Side::Right, {1, 3});
    // group (w_l=2, w_r=3): m = 1, p = min(6/4, 1) = 1
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = sample_fast(sl, sr, seed);
        CHECK(std::count(g.edges.begin(), g.edges.end(), BipartiteEdge{2, 1}) == 1);
    }
}

TEST_CASE("group edge drawing: forced, empty, and uniform-distinct cases") {
    auto gp1 = make_group_pair(1, 1, {0}, {0}, 1.0);  // p = 1, m = 1
    CHECK(sample_group_edges(gp1, 3) == std::vector<BipartiteEdge>{{0, 0}});

    auto gp0 = make_group_pair(1, 1, {0, 1}, {0, 1, 2}, 1e18);  // p ~ 0
    CHECK(sample_group_edges(gp0, 3).empty());

    // m = 4, p = 1/2: each pair appears with frequency 1/2; no repeats in a call
    auto gp = make_group_pair(1.0, 1.0, {0, 1}, {0, 1}, 2.0);
    REQUIRE(gp.p == doctest::Approx(0.5));
    std::map<BipartiteEdge, int> counts;
    const int trials = 100'000;
    for (int t = 0; t < trials; ++t) {
        auto edges = sample_group_edges(gp, 1000 + t);
        std::set<BipartiteEdge> unique(edges.begin(), edges.end());
        CHECK(unique.size() == edges.size());
        for (const auto& e : edges) counts[e]++;
    }
    for (NodeId a = 0; a < 2; ++a)
        for (NodeId b = 0; b < 2; ++b) {
            const double freq = static_cast<double>(counts[{a, b}]) / trials;
            CHECK(std::abs(freq - 0.5) < 0.01);
        }
}

TEST_CASE("naive and fast samplers share their per-pair edge marginals") {
    // exact marginal oracle: min(w_u w_v / sum(S_R), 1)
    for (std::uint64_t inst = 0; inst < 4; ++inst) {
        auto tiny = oracles::random_tiny_instance(900 + inst, 6);
        WeightSequence sl(Side::Left, tiny.left), sr(Side::Right, tiny.right);
        const std::size_t nl = sl.size(), nr = sr.size();
        const int trials = 20'000;
        std::vector<int> hits_naive(nl * nr, 0), hits_fast(nl * nr, 0);
        for (int t = 0; t < trials; ++t) {
            for (const auto& [u, v] : sample_naive(sl, sr, 7000 + t).edges)
                ++hits_naive[u * nr + v];
            for (const auto& [u, v] : sample_fast(sl, sr, 9000 + t).edges)
                ++hits_fast[u * nr + v];
        }
        for (std::size_t u = 0; u < nl; ++u) {
            for (std::size_t v = 0; v < nr; ++v) {
                const double p =
                    edge_probability(tiny.left[u], tiny.right[v], sr.sum());
                const double se = std::sqrt(p * (1 - p) / trials);
                const double fn = static_cast<double>(hits_naive[u * nr + v]) / trials;
                const double ff = static_cast<double>(hits_fast[u * nr + v]) / trials;
                CHECK(std::abs(fn - p) <= 4.0 * se + 1e-12);
                CHECK(std::abs(ff - p) <= 4.0 * se + 1e-12);
            }
        }
    }
}

TEST_CASE("random intersection preserves left degrees exactly") {
    WeightSequence degrees(Side::Left, {3, 1, 2, 2, 1});
    auto g = sample_random_intersection(degrees, 6, 77);
    auto ld = g.left_degrees();
    for (std::size_t u = 0; u < degrees.size(); ++u)
        CHECK(static_cast<double>(ld[u]) == degrees.values()[u]);
}

TEST_CASE("random intersection saturates when the degree equals n_right") {
    WeightSequence degrees(Side::Left, {4});
    auto g = sample_random_intersection(degrees, 4, 5);
    CHECK(g.num_edges() == 4);
    CHECK_THROWS_AS(sample_random_intersection(WeightSequence(Side::Left, {5}), 4, 5),
                    ParameterError);
}

TEST_CASE("random intersection pair collision probability") {
    // two degree-1 nodes over two right nodes: P(both pick 0) = 1/4
    WeightSequence degrees(Side::Left, {1, 1});
    const int trials = 40'000;
    int both_zero = 0;
    for (int t = 0; t < trials; ++t) {
        auto g = sample_random_intersection(degrees, 2, 300 + t);
        if (g.edges[0].second == 0 && g.edges[1].second == 0) ++both_zero;
    }
    const double freq = static_cast<double>(both_zero) / trials;
    CHECK(std::abs(freq - 0.25) < 4.0 * std::sqrt(0.25 * 0.75 / trials));
}

TEST_CASE("identical seeds give identical graphs for every sampler") {
    // uncapped probabilities so different seeds can actually differ
    WeightSequence sl(Side::Left, {1, 1, 2, 2, 3});
    WeightSequence sr(Side::Right, std::vector<double>(8, 1.0));
    CHECK(sample_naive(sl, sr, 5).edges == sample_naive(sl, sr, 5).edges);
    CHECK(sample_fast(sl, sr, 5).edges == sample_fast(sl, sr, 5).edges);
    CHECK(sample_random_intersection(sl, 20, 5).edges ==
          sample_random_intersection(sl, 20, 5).edges);
    CHECK(sample_fast(sl, sr, 5).edges != sample_fast(sl, sr, 6).edges);
}

TEST_CASE("bipartite degree of a fixed-weight node approaches Poisson(w)") {
    // n_R = 1e5 constant right weights; left node with w = 5; TV to
    // Poisson(5) over 1e5 trials
    const std::size_t n_right = 100'000;
    WeightSequence sl(Side::Left, {5.0});
    WeightSequence sr(Side::Right, std::vector<double>(n_right, 1.0));
    const int trials = 100'000;
    std::vector<std::uint64_t> hist;
    for (int t = 0; t < trials; ++t) {
        const auto d = sample_fast(sl, sr, 4000 + t).num_edges();
        if (hist.size() <= d) hist.resize(d + 1, 0);
        ++hist[d];
    }
    double tv = 0.0;
    for (std::size_t k = 0; k < std::max<std::size_t>(hist.size(), 40); ++k) {
        const double emp = k < hist.size() ? static_cast<double>(hist[k]) / trials : 0.0;
        tv += std::abs(emp - poisson_pmf(5.0, k));
    }
    CHECK(tv / 2.0 < 0.01);
}
