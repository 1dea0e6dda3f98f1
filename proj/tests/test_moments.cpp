#include <doctest.h>

#include <cmath>

#include "cspcd/moments.hpp"

using namespace cspcd;

TEST_CASE("middle moments spot values") {
    CHECK(mu_middle(Params{1.0, 0.5}) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(four_nu_middle(Params{1.0, 0.5}) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK(mu_middle(Params{0.5, 0.5}) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(mu_middle(Params{2.0, 0.5}) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(mu_middle(Params{2.0, 0.25}) == doctest::Approx(22.0 / 35.0).epsilon(1e-14));
    CHECK(four_nu_middle(Params{2.0, 0.5}) == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
    for (double c : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        CHECK(mu_middle(Params{1.0, c}) == doctest::Approx(0.5).epsilon(1e-13));
        CHECK(four_nu_middle(Params{1.0, c}) ==
              doctest::Approx(c * (1.0 - c) / 3.0).epsilon(1e-13));
    }
    // tau = inf is the degenerate limit
    CHECK(mu_middle(Params{Params::infinite_tau(), 0.3}) == 1.0);
    CHECK(four_nu_middle(Params{Params::infinite_tau(), 0.3}) == 0.0);
}

TEST_CASE("end moments spot values") {
    CHECK(mu_end(1.0) == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(four_nu_end(1.0) == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
    CHECK(four_nu_end(2.0) == doctest::Approx(4.0 / 81.0).epsilon(1e-14));
    CHECK(mu_end(0.5) == doctest::Approx(5.0 / 12.0).epsilon(1e-14));
    CHECK(mu_end(Params::infinite_tau()) == 1.0);
    CHECK(four_nu_end(Params::infinite_tau()) == 0.0);
}

TEST_CASE("symmetry under c <-> 1-c") {
    // up to one ulp from folding 1-(1-c)
    for (double tau : {0.3, 0.8, 1.0, 1.7, 5.0})
        for (double c : {0.05, 0.2, 0.35, 0.45}) {
            CHECK(mu_middle(Params{tau, c}) ==
                  doctest::Approx(mu_middle(Params{tau, 1.0 - c})).epsilon(1e-14));
            CHECK(four_nu_middle(Params{tau, c}) ==
                  doctest::Approx(four_nu_middle(Params{tau, 1.0 - c})).epsilon(1e-14));
        }
}

TEST_CASE("branch continuity at tau = 1") {
    for (double c : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        const double below = four_nu_middle(Params{std::nextafter(1.0, 0.0), c});
        const double at = four_nu_middle(Params{1.0, c});
        CHECK(std::abs(below - at) <= 1e-12);
        const double mu_below = mu_middle(Params{std::nextafter(1.0, 0.0), c});
        CHECK(std::abs(mu_below - mu_middle(Params{1.0, c})) <= 1e-12);
    }
    CHECK(std::abs(four_nu_end(std::nextafter(1.0, 0.0)) - four_nu_end(1.0)) <= 1e-12);
    CHECK(std::abs(mu_end(std::nextafter(1.0, 0.0)) - mu_end(1.0)) <= 1e-12);
}

TEST_CASE("variance vanishes in both tau limits and is positive in between") {
    for (double c : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        CHECK(four_nu_middle(Params{1e-6, c}) < 1e-5);
        CHECK(four_nu_middle(Params{1e6, c}) < 1e-5);
        for (double tau : {1e-3, 0.05, 0.4, 1.0, 3.0, 40.0, 1e3})
            CHECK(four_nu_middle(Params{tau, c}) > 0.0);
    }
    CHECK(four_nu_end(1e-6) < 1e-5);
    CHECK(four_nu_end(1e6) < 1e-5);
    for (double tau : {1e-3, 0.05, 0.4, 1.0, 3.0, 40.0, 1e3}) CHECK(four_nu_end(tau) > 0.0);
}

TEST_CASE("mixture moments") {
    SUBCASE("single middle cell collapses onto the middle moments") {
        auto part = build_partition(SupportInterval(0.0, 1.0), AnchorSet({0.0, 1.0}), true);
        Params p{1.3, 0.4};
        auto mix = mixture_moments(part, p);
        CHECK(mix.mu_tilde == doctest::Approx(mu_middle(p)).epsilon(1e-15));
        CHECK(mix.mu_breve == mu_middle(p));
        CHECK(mix.four_nu_tilde == doctest::Approx(four_nu_middle(p)).epsilon(1e-12));
        CHECK(mix.four_nu_breve == doctest::Approx(four_nu_middle(p)).epsilon(1e-12));
    }
    SUBCASE("two equal end cells at tau=1") {
        auto part = build_partition(SupportInterval(0.0, 1.0), AnchorSet({0.5}));
        auto mix = mixture_moments(part, Params{1.0, 0.5});
        CHECK(mix.mu_tilde == doctest::Approx(3.0 / 8.0).epsilon(1e-14));
        CHECK(mix.mu_breve == doctest::Approx(3.0 / 4.0).epsilon(1e-14));
        // S_end = 55/24 at tau=1, so 4 nu~ = (55/24)(1/4) - 4 (3/8)^2 = 1/96
        CHECK(mix.four_nu_tilde == doctest::Approx(1.0 / 96.0).epsilon(1e-13));
        CHECK(mix.four_nu_breve == doctest::Approx(1.0 / 24.0).epsilon(1e-13));
    }
    SUBCASE("version identities") {
        auto part = build_partition(SupportInterval(0.0, 2.0), AnchorSet({0.3, 0.9, 1.5}));
        Params p{0.8, 0.3};
        auto mix = mixture_moments(part, p);
        CHECK(mix.mu_breve == doctest::Approx(mix.mu_tilde / mix.sum_w2).epsilon(1e-15));
        CHECK(mix.four_nu_breve ==
              doctest::Approx(mix.four_nu_tilde / (mix.sum_w2 * mix.sum_w2)).epsilon(1e-15));
    }
    SUBCASE("degenerate at tau = inf") {
        auto part = build_partition(SupportInterval(0.0, 1.0), AnchorSet({0.5}));
        CHECK_THROWS_AS(mixture_moments(part, Params{Params::infinite_tau(), 0.5}),
                        std::domain_error);
    }
}

TEST_CASE("convergence rate reproduces the printed instances") {
    CHECK(convergence_rate({0.5, 1.0 / 12.0}, 1) ==
          doctest::Approx(12.0 * std::sqrt(3.0)).epsilon(1e-13));
    CHECK(convergence_rate({0.75, 1.0 / 24.0}, 1) ==
          doctest::Approx(36.0 * std::sqrt(6.0)).epsilon(1e-13));
    for (double c : {0.2, 0.35, 0.5}) {
        const double expected =
            1.5 * std::sqrt(3.0) / std::sqrt(std::pow(c * (1.0 - c), 3.0));
        CHECK(convergence_rate(middle_moments(Params{1.0, c}), 1) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
    // 1/sqrt(n) scaling
    CHECK(convergence_rate({0.5, 1.0 / 12.0}, 100) ==
          doctest::Approx(1.2 * std::sqrt(3.0)).epsilon(1e-13));
    CHECK_THROWS_AS(convergence_rate({1.0, 0.0}, 10), std::domain_error);
}

TEST_CASE("optimal parameters match the claimed minimizers") {
    auto mid = optimal_parameters(Regime::MiddleCHalf);
    CHECK(std::abs(mid.tau_star - 0.73) <= 0.01);
    CHECK(!mid.c_star.has_value());

    auto end = optimal_parameters(Regime::End);
    CHECK(std::abs(end.tau_star - 0.58) <= 0.01);

    auto full = optimal_parameters(Regime::MiddleFull);
    CHECK(std::abs(full.tau_star - 1.55) <= 0.05);
    REQUIRE(full.c_star.has_value());
    CHECK(std::abs(*full.c_star - 0.5) <= 0.02);
}
