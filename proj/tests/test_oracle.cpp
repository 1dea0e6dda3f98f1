#include <doctest.h>

#include <cmath>

#include "cspcd/moments.hpp"
#include "cspcd/oracle.hpp"

using namespace cspcd;

TEST_CASE("case probabilities at tau=1") {
    SUBCASE("middle, c = 1/2") {
        auto cp = case_probabilities(Params{1.0, 0.5}, CellKind::Middle);
        CHECK(cp.p_a == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(cp.p2n == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
        CHECK(cp.png == doctest::Approx(0.25).epsilon(1e-10));
        CHECK(cp.p2g == doctest::Approx(0.25).epsilon(1e-10));
    }
    SUBCASE("end") {
        auto cp = case_probabilities(Params{1.0, 0.5}, CellKind::RightEnd);
        CHECK(cp.p_a == doctest::Approx(0.75).epsilon(1e-10));
        CHECK(cp.p2n == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
        CHECK(cp.png == doctest::Approx(25.0 / 48.0).epsilon(1e-10));
        CHECK(cp.p2g == doctest::Approx(7.0 / 12.0).epsilon(1e-10));
    }
    SUBCASE("middle, c = 0.3: arc probability and p2n are c-free at tau=1") {
        auto cp = case_probabilities(Params{1.0, 0.3}, CellKind::Middle);
        CHECK(cp.p_a == doctest::Approx(0.5).epsilon(1e-10));
        CHECK(cp.p2n == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    }
}

TEST_CASE("derived moments from probabilities") {
    CaseProbabilities cp{0.5, 1.0 / 3.0, 0.25, 0.25, CellKind::Middle};
    auto m = moments_from_probabilities(cp);
    CHECK(m.mu == 0.5);
    CHECK(m.four_nu == doctest::Approx(1.0 / 12.0).epsilon(1e-14));

    CaseProbabilities ones{1.0, 1.0, 1.0, 1.0, CellKind::Middle};
    auto degenerate = moments_from_probabilities(ones);
    CHECK(degenerate.mu == 1.0);
    CHECK(degenerate.four_nu == 0.0);

    CaseProbabilities end1{0.75, 2.0 / 3.0, 25.0 / 48.0, 7.0 / 12.0, CellKind::RightEnd};
    auto me = moments_from_probabilities(end1);
    CHECK(me.mu == 0.75);
    CHECK(me.four_nu == doctest::Approx(1.0 / 24.0).epsilon(1e-13));
}

TEST_CASE("tau = inf returns the all-ones limit") {
    auto cp = case_probabilities(Params{Params::infinite_tau(), 0.4}, CellKind::Middle);
    CHECK(cp.p_a == 1.0);
    CHECK(cp.p2n == 1.0);
    CHECK(cp.png == 1.0);
    CHECK(cp.p2g == 1.0);
    auto m = moments_from_probabilities(cp);
    CHECK(m.mu == 1.0);
    CHECK(m.four_nu == 0.0);
}

TEST_CASE("oracle agrees with the closed forms on a coarse grid") {
    // the acceptance suite runs the full grid; spot-check both branches here
    for (double tau : {0.5, 1.0, 2.0}) {
        for (double c : {0.3, 0.5, 0.7}) {
            Params p{tau, c};
            auto m = moments_from_probabilities(case_probabilities(p, CellKind::Middle));
            CHECK(std::abs(m.mu - mu_middle(p)) <= 1e-8);
            CHECK(std::abs(m.four_nu - four_nu_middle(p)) <= 1e-8);
        }
        auto me = moments_from_probabilities(
            case_probabilities(Params{tau, 0.5}, CellKind::RightEnd));
        CHECK(std::abs(me.mu - mu_end(tau)) <= 1e-8);
        CHECK(std::abs(me.four_nu - four_nu_end(tau)) <= 1e-8);
    }
}

TEST_CASE("oracle agreement holds well outside the standard grid") {
    for (double tau : {0.05, 0.95, 1.05, 10.0, 20.0}) {
        for (double c : {0.07, 0.5, 0.93}) {
            Params p{tau, c};
            auto m = moments_from_probabilities(case_probabilities(p, CellKind::Middle, 1e-11));
            CHECK(std::abs(m.mu - mu_middle(p)) <= 1e-8);
            CHECK(std::abs(m.four_nu - four_nu_middle(p)) <= 1e-8);
        }
        auto me = moments_from_probabilities(
            case_probabilities(Params{tau, 0.5}, CellKind::RightEnd, 1e-11));
        CHECK(std::abs(me.mu - mu_end(tau)) <= 1e-8);
        CHECK(std::abs(me.four_nu - four_nu_end(tau)) <= 1e-8);
    }
}

TEST_CASE("arc probability is nondecreasing in tau") {
    for (double c : {0.2, 0.5, 0.8}) {
        double prev_mid = 0.0, prev_end = 0.0;
        for (double tau : {0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 4.0}) {
            auto mid = case_probabilities(Params{tau, c}, CellKind::Middle);
            auto end = case_probabilities(Params{tau, c}, CellKind::RightEnd);
            CHECK(mid.p_a >= prev_mid - 1e-12);
            CHECK(end.p_a >= prev_end - 1e-12);
            prev_mid = mid.p_a;
            prev_end = end.p_a;
        }
    }
}

TEST_CASE("probabilities stay in [0,1] with p2n below p_a") {
    for (double tau : {0.1, 0.9, 1.0, 3.0})
        for (double c : {0.15, 0.5, 0.85}) {
            auto cp = case_probabilities(Params{tau, c}, CellKind::Middle);
            for (double v : {cp.p_a, cp.p2n, cp.png, cp.p2g}) {
                CHECK(v >= -1e-12);
                CHECK(v <= 1.0 + 1e-12);
            }
            CHECK(cp.p2n <= cp.p_a + 1e-12);
        }
}
