#include <doctest.h>

#include <cmath>

#include "biproj/errors.hpp"
#include "biproj/theory.hpp"
#include "biproj/weights.hpp"
#include "oracles.hpp"

using namespace biproj;

namespace {

MomentBundle bundle_of(const std::vector<double>& left, const std::vector<double>& right) {
    return MomentBundle::from_sequences(WeightSequence(Side::Left, left),
                                        WeightSequence(Side::Right, right));
}

}  // namespace

TEST_CASE("asymptotic edge probability") {
    MomentBundle mb = bundle_of(std::vector<double>(100, 1.0), std::vector<double>(100, 1.0));
    CHECK(p_edge_asymptotic(2, 3, mb).first_order == doctest::Approx(0.06));

    MomentBundle mb2 = bundle_of({1, 1, 1}, {1, 2, 3});
    // (14/3)/4 * 1/3 = 7/18
    CHECK(p_edge_asymptotic(1, 1, mb2).first_order == doctest::Approx(7.0 / 18.0));

    CHECK(p_edge_asymptotic(1e-12, 1e-12, mb).first_order == doctest::Approx(0.0));
    CHECK_THROWS_AS(p_edge_asymptotic(0, 1, mb), ParameterError);
}

TEST_CASE("exact edge probability hand values") {
    WeightSequence sr(Side::Right, {1, 1});
    CHECK(p_edge_exact(1, 1, sr) == doctest::Approx(7.0 / 16.0));

    // capped factor forces probability one
    WeightSequence single(Side::Right, {1});
    CHECK(p_edge_exact(2, 2, single) == doctest::Approx(1.0));
}

TEST_CASE("exact edge probability approaches the corrected asymptotic value") {
    WeightSequence sr(Side::Right, std::vector<double>(10'000, 1.0));
    MomentBundle mb = bundle_of(std::vector<double>(10'000, 1.0), sr.values());
    const double exact = p_edge_exact(2, 3, sr);
    const auto asym = p_edge_asymptotic(2, 3, mb);
    CHECK(std::abs(exact - asym.corrected) / exact < 0.01);
    CHECK(std::abs(exact - asym.first_order) < 1e-3);
}

TEST_CASE("exact wedge probability hand value") {
    WeightSequence sr(Side::Right, {1, 1});
    // per node: 1 - 2/4 + 1/8 = 0.625; squared = 0.390625
    // wedge = 7/16 + 7/16 - 1 + 0.390625 = 0.265625
    CHECK(p_wedge_exact(1, 1, 1, sr) == doctest::Approx(0.265625));
}

TEST_CASE("wedge probability dominates the independent-edge product") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto tiny = oracles::random_tiny_instance(1234 + seed, 8);
        WeightSequence sr(Side::Right, tiny.right);
        Rng rng(seed);
        const double wu = 1.0 + static_cast<double>(rng.below(3));
        const double w1 = 1.0 + static_cast<double>(rng.below(3));
        const double w2 = 1.0 + static_cast<double>(rng.below(3));
        const double wedge = p_wedge_exact(wu, w1, w2, sr);
        const double product = p_edge_exact(wu, w1, sr) * p_edge_exact(wu, w2, sr);
        CHECK(wedge >= product - 1e-12);
    }
}

TEST_CASE("triangle common-neighbor term") {
    WeightSequence sr(Side::Right, {1, 1});
    // per node q = (1/2)^3 = 1/8; 1 - (7/8)^2 = 15/64
    CHECK(p_triangle_common_neighbor(1, 1, 1, sr) == doctest::Approx(15.0 / 64.0));
}

TEST_CASE("triangle probability is the common-neighbor term plus a bounded remainder") {
    // remainder (three distinct witnesses forming a 6-cycle) is at most
    // p_uu1 * p_uu2 * p_u1u2 in the asymptotic edge probabilities
    auto sr_values = sample_power_law({2.5, 1, 7, true}, 50, 3, Side::Right).values();
    WeightSequence sr(Side::Right, sr_values);
    MomentBundle mb = MomentBundle::from_sequences(WeightSequence(Side::Left, {1.0}), sr);
    const std::uint64_t trials = 200'000;
    for (double w : {2.0, 3.0}) {
        const double mc = mc_triangle_probability(w, 2, 2, sr, trials, 91);
        const double main_term = p_triangle_common_neighbor(w, 2, 2, sr);
        const double se = std::sqrt(mc * (1.0 - mc) / static_cast<double>(trials));
        CHECK(mc >= main_term - 4.0 * se);
        const double bound = p_edge_asymptotic(w, 2, mb).first_order *
                             p_edge_asymptotic(w, 2, mb).first_order *
                             p_edge_asymptotic(2, 2, mb).first_order;
        CHECK(mc - main_term <= bound + 4.0 * se);
    }
}

TEST_CASE("expected projected degree") {
    MomentBundle ones = bundle_of(std::vector<double>(50, 1.0), std::vector<double>(50, 1.0));
    CHECK(predict_expected_degree(1, ones) == doctest::Approx(1.0));

    // SR = [1,2,3], M_L1 = 2, n_L = n_R: (14/3)/4 * 2 * 3 = 7
    MomentBundle mb = bundle_of({1, 2, 3}, {1, 2, 3});
    CHECK(predict_expected_degree(3, mb) == doctest::Approx(7.0));
}

TEST_CASE("local clustering prediction") {
    MomentBundle ones = bundle_of(std::vector<double>(10, 1.0), std::vector<double>(10, 1.0));
    CHECK(predict_local_clustering(1, ones) == doctest::Approx(0.5));
    CHECK(predict_local_clustering(1e9, ones) < 1e-6);

    // SR = [1,2,3]: ratio = (14/3)^2 / (12 * 2) = 196/216
    MomentBundle mb = bundle_of({1}, {1, 2, 3});
    CHECK(mb.clustering_ratio() == doctest::Approx(196.0 / 216.0));
    CHECK(predict_local_clustering(2, mb) == doctest::Approx(1.0 / (1.0 + 2.0 * 196.0 / 216.0)));

    // strictly decreasing in the weight
    for (double w = 1; w < 20; w += 1)
        CHECK(predict_local_clustering(w + 1, mb) < predict_local_clustering(w, mb));
    // inverse relationship is exact
    for (double w : {0.5, 1.0, 3.0, 17.0})
        CHECK(predict_local_clustering(w, mb) * (1.0 + mb.clustering_ratio() * w) ==
              doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("global clustering and closure predictions coincide") {
    MomentBundle ones = bundle_of(std::vector<double>(10, 1.0), std::vector<double>(10, 1.0));
    CHECK(predict_global_clustering(ones) == doctest::Approx(0.5));
    CHECK(predict_closure(ones) == predict_global_clustering(ones));

    MomentBundle heavy = bundle_of({1, 2, 3}, {1, 1, 1, 1, 8});
    CHECK(predict_closure(heavy) == predict_global_clustering(heavy));
    // smaller ratio (heavier right tail) means more clustering
    MomentBundle light = bundle_of({1, 2, 3}, std::vector<double>(5, 1.0));
    CHECK(heavy.clustering_ratio() < light.clustering_ratio());
    CHECK(predict_global_clustering(heavy) > predict_global_clustering(light));
}

TEST_CASE("cauchy-schwarz bounds the clustering ratio") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto tiny = oracles::random_tiny_instance(99 + seed, 10, 20);
        MomentBundle mb = bundle_of(tiny.left, tiny.right);
        CHECK(mb.clustering_ratio() <= 1.0 + 1e-12);
        CHECK(mb.M_R1 * mb.M_R1 <= mb.M_R2 * (1 + 1e-12));
        CHECK(mb.M_R2 * mb.M_R2 <= mb.M_R1 * mb.M_R3 * (1 + 1e-12));
    }
}

TEST_CASE("monotone expected degree") {
    MomentBundle mb = bundle_of({1, 2, 3}, {1, 2, 3});
    for (double w = 1; w < 10; w += 1)
        CHECK(predict_expected_degree(w + 1, mb) > predict_expected_degree(w, mb));
}

TEST_CASE("poisson pmf") {
    CHECK(poisson_pmf(5.0, 5) == doctest::Approx(0.1754673697678507).epsilon(1e-12));
    CHECK(poisson_pmf(1e-12, 0) == doctest::Approx(1.0));
    double sum = 0.0;
    for (std::uint64_t k = 0; k <= 200; ++k) sum += poisson_pmf(5.0, k);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(poisson_pmf(0.0, 1), ParameterError);
}

TEST_CASE("projected exponent rule") {
    CHECK(predicted_projected_exponent(2.5, 4.0) == doctest::Approx(2.5));
    CHECK(predicted_projected_exponent(4.0, 3.5) == doctest::Approx(2.5));
    CHECK(predicted_projected_exponent(3.0, 4.0) == doctest::Approx(3.0));
    CHECK_THROWS_AS(predicted_projected_exponent(1.0, 3.0), ParameterError);
}
