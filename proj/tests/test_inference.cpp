#include <doctest.h>

#include <cmath>
#include <vector>

#include "cspcd/inference.hpp"
#include "cspcd/rng.hpp"

using namespace cspcd;

TEST_CASE("standardization at the null center") {
    auto res = standardize_density(0.5, 0.5, 1.0 / 12.0, 1000, 2);
    CHECK(res.z == 0.0);
    CHECK(res.p_two_sided == doctest::Approx(1.0));
    CHECK(res.p_greater == doctest::Approx(0.5));
    CHECK(res.p_less == doctest::Approx(0.5));
    CHECK_THROWS_AS(standardize_density(0.5, 0.5, 0.0, 100, 2), std::domain_error);
    CHECK_THROWS_AS(standardize_density(0.5, 0.5, 0.1, 1, 2), std::invalid_argument);
}

TEST_CASE("one-sided p-values sum to one exactly") {
    SplitMix64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const double rho = rng.next_open01();
        auto res = standardize_density(rho, 0.4, 0.05, 500, 2);
        CHECK(res.p_greater + res.p_less == 1.0);
        CHECK(res.p_two_sided == doctest::Approx(2.0 * std::min(res.p_greater, res.p_less)));
    }
}

TEST_CASE("spatial test input validation") {
    SupportInterval support(0.0, 1.0);
    AnchorSet anchors({1.0 / 3.0, 2.0 / 3.0});
    std::vector<double> xs{0.1};
    CHECK_THROWS_AS(spatial_test(xs, anchors, support, Params{1.0, 0.5}), std::invalid_argument);
    std::vector<double> pair{0.1, 0.2};
    CHECK_THROWS_AS(spatial_test(pair, anchors, support, Params{Params::infinite_tau(), 0.5}),
                    std::domain_error);
    CHECK_THROWS_AS(spatial_test(pair, anchors, support, Params{1.0, 0.5}, 3),
                    std::invalid_argument);
}

TEST_CASE("type-I error near the nominal level under the null") {
    SupportInterval support(0.0, 1.0);
    AnchorSet anchors({1.0 / 3.0, 2.0 / 3.0});
    Params params{1.0, 0.5};
    const int n = 1000;
    int rejections = 0;
    const int batches = 200;
    for (int b = 0; b < batches; ++b) {
        SplitMix64 rng = replicate_stream(777, b);
        std::vector<double> xs(n);
        for (double& x : xs) x = rng.next_open01();
        auto res = spatial_test(xs, anchors, support, params, 2);
        rejections += (res.p_two_sided < 0.05);
    }
    const double rate = static_cast<double>(rejections) / batches;
    CHECK(rate >= 0.02);
    CHECK(rate <= 0.09);
}

TEST_CASE("points piled at cell centers push |z| far from zero") {
    // segregation-style alternative: X mass concentrated away from anchors
    SupportInterval support(0.0, 1.0);
    AnchorSet anchors({1.0 / 3.0, 2.0 / 3.0});
    SplitMix64 rng(4);
    std::vector<double> xs;
    const double centers[3] = {1.0 / 6.0, 0.5, 5.0 / 6.0};
    for (int i = 0; i < 1000; ++i)
        xs.push_back(centers[i % 3] + 0.02 * (rng.next_open01() - 0.5));
    auto res = spatial_test(xs, anchors, support, Params{0.5, 0.5}, 2);
    CHECK(std::abs(res.z) > 3.0);
    CHECK(res.p_two_sided < 0.01);
}

TEST_CASE("test statistic is invariant under joint increasing affine maps") {
    SupportInterval support(0.0, 1.0);
    AnchorSet anchors({0.3, 0.8});
    SplitMix64 rng(15);
    std::vector<double> xs(400);
    for (double& x : xs) x = rng.next_open01();
    auto base = spatial_test(xs, anchors, support, Params{0.9, 0.4}, 2);

    const double a = 3.5, b = -1.25;
    std::vector<double> mapped(xs);
    for (double& x : mapped) x = a * x + b;
    auto shifted = spatial_test(mapped, AnchorSet({a * 0.3 + b, a * 0.8 + b}),
                                SupportInterval(b, a + b), Params{0.9, 0.4}, 2);
    CHECK(base.rho_observed == shifted.rho_observed);  // arc sets are identical index sets
    CHECK(base.z == doctest::Approx(shifted.z).epsilon(1e-12));
    CHECK(base.p_two_sided == doctest::Approx(shifted.p_two_sided).epsilon(1e-12));
}

TEST_CASE("version 1 and version 2 statistics are both centered under the null") {
    SupportInterval support(0.0, 1.0);
    AnchorSet anchors({0.5});
    SplitMix64 rng = replicate_stream(99, 0);
    std::vector<double> xs(2000);
    for (double& x : xs) x = rng.next_open01();
    auto v2 = spatial_test(xs, anchors, support, Params{1.0, 0.5}, 2);
    auto v1 = spatial_test(xs, anchors, support, Params{1.0, 0.5}, 1);
    CHECK(v2.mu_null == doctest::Approx(0.375));
    CHECK(v1.mu_null == doctest::Approx(0.75));
    CHECK(std::abs(v2.z) < 4.0);
    CHECK(std::abs(v1.z) < 4.0);
}
