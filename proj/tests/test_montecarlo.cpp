#include <doctest.h>

#include <cmath>

#include "cspcd/moments.hpp"
#include "cspcd/montecarlo.hpp"
#include "cspcd/oracle.hpp"

using namespace cspcd;

namespace {

MCConfig base_config() {
    MCConfig cfg;
    cfg.partition = build_partition(SupportInterval(0.0, 1.0), AnchorSet({0.0, 1.0}), true);
    cfg.params = Params{1.0, 0.5};
    return cfg;
}

} // namespace

TEST_CASE("identical seeds give bit-identical reports for any worker count") {
    MCConfig cfg = base_config();
    cfg.n = 150;
    cfg.reps = 64;
    cfg.seed = 42;
    cfg.workers = 1;
    auto serial = simulate_density(cfg);
    cfg.workers = 4;
    auto parallel = simulate_density(cfg);
    CHECK(serial.densities == parallel.densities);
    CHECK(serial.mean == parallel.mean);
    CHECK(serial.variance == parallel.variance);
    CHECK(serial.standardized == parallel.standardized);
    CHECK(serial.ks_stat == parallel.ks_stat);
}

TEST_CASE("tau = inf: every replicate density is exactly one") {
    MCConfig cfg = base_config();
    cfg.params = Params{Params::infinite_tau(), 0.5};
    cfg.n = 25;
    cfg.reps = 20;
    auto rep = simulate_density(cfg);
    CHECK(rep.degenerate);
    CHECK(rep.standardized.empty());
    for (double d : rep.densities) CHECK(d == 1.0);
    CHECK(rep.mean == 1.0);
}

TEST_CASE("desk-scale CLT at tau=1, c=1/2") {
    MCConfig cfg = base_config();
    cfg.n = 500;
    cfg.reps = 400;
    cfg.seed = 3;
    cfg.workers = 2;
    auto rep = simulate_density(cfg);
    const double se = std::sqrt(rep.variance / cfg.reps);
    CHECK(std::abs(rep.mean - 0.5) <= 3.0 * se);
    CHECK(rep.ks_pvalue > 0.01);
    CHECK(rep.variance <= 0.25);  // U-statistic variance cap
}

TEST_CASE("two end cells: version II mean near 3/8, version I near 3/4") {
    MCConfig cfg;
    cfg.partition = build_partition(SupportInterval(0.0, 1.0), AnchorSet({0.5}));
    cfg.params = Params{1.0, 0.5};
    cfg.n = 600;
    cfg.reps = 300;
    cfg.seed = 11;
    cfg.density_version = 2;
    auto v2 = simulate_density(cfg);
    CHECK(std::abs(v2.mean - 0.375) <= 3.0 * std::sqrt(v2.variance / cfg.reps));
    cfg.density_version = 1;
    auto v1 = simulate_density(cfg);
    CHECK(std::abs(v1.mean - 0.75) <= 3.0 * std::sqrt(v1.variance / cfg.reps));
    // scaled variances approach the mixture values 1/96 and 1/24
    const auto mix = mixture_moments(cfg.partition, cfg.params);
    CHECK(mix.four_nu_breve == doctest::Approx(1.0 / 24.0).epsilon(1e-12));
    CHECK(cfg.n * v2.variance == doctest::Approx(1.0 / 96.0).epsilon(0.3));
    CHECK(cfg.n * v1.variance == doctest::Approx(1.0 / 24.0).epsilon(0.3));
}

TEST_CASE("normality diagnostic input validation") {
    std::vector<double> short_list(10, 0.1);
    CHECK_THROWS_AS(normality_diagnostic(short_list), std::invalid_argument);
    std::vector<double> constant(50, 0.0);
    auto [stat, p] = normality_diagnostic(constant);
    CHECK(stat == doctest::Approx(0.5));
    CHECK(p < 1e-6);
}

TEST_CASE("joint pmf of (2h12, 2h13)") {
    MCConfig cfg = base_config();
    cfg.reps = 200000;
    cfg.seed = 5;
    auto pmf = joint_h_pmf(cfg);

    double total = 0.0, e_h12h13 = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            total += pmf[i][j];
            e_h12h13 += (i / 2.0) * (j / 2.0) * pmf[i][j];
        }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    // E[h12 h13] = (P2N + 2 PNG + P2G)/4 = 13/48 at tau=1, c=1/2
    auto cp = case_probabilities(cfg.params, CellKind::Middle);
    const double target = (cp.p2n + 2.0 * cp.png + cp.p2g) / 4.0;
    CHECK(target == doctest::Approx(13.0 / 48.0).epsilon(1e-9));
    const double se = std::sqrt(0.25 / cfg.reps);  // bounded kernel, crude bound
    CHECK(std::abs(e_h12h13 - target) <= 3.0 * se);

    // exchangeability of X2, X3: pmf is symmetric up to MC error
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double diff = pmf[i][j] - pmf[j][i];
            const double se_ij =
                std::sqrt((pmf[i][j] + pmf[j][i]) / cfg.reps) + 1e-9;
            CHECK(std::abs(diff) <= 3.0 * se_ij);
        }

    MCConfig bad = cfg;
    bad.partition = build_partition(SupportInterval(0.0, 1.0), AnchorSet({0.5}));
    CHECK_THROWS_AS(joint_h_pmf(bad), std::invalid_argument);
}

TEST_CASE("version-II mean is unbiased for the mixture value in a 3-cell partition") {
    MCConfig cfg;
    cfg.partition =
        build_partition(SupportInterval(0.0, 1.0), AnchorSet({1.0 / 3.0, 2.0 / 3.0}));
    cfg.params = Params{1.0, 0.5};
    cfg.n = 400;
    cfg.reps = 400;
    cfg.seed = 29;
    cfg.workers = 2;
    auto rep = simulate_density(cfg);
    const auto mix = mixture_moments(cfg.partition, cfg.params);
    CHECK(mix.mu_tilde == doctest::Approx(2.0 / 9.0).epsilon(1e-13));
    CHECK(std::abs(rep.mean - mix.mu_tilde) <= 3.0 * std::sqrt(rep.variance / cfg.reps));
}

TEST_CASE("worker count resolution") {
    CHECK(resolve_workers(2) == 2);
    setenv("CSPCD_WORKERS", "3", 1);
    CHECK(resolve_workers(0) == 3);
    CHECK(resolve_workers(5) == 5);  // explicit request wins
    unsetenv("CSPCD_WORKERS");
    CHECK(resolve_workers(0) == 1);
}

TEST_CASE("config validation") {
    MCConfig cfg = base_config();
    cfg.n = 1;
    CHECK_THROWS_AS(simulate_density(cfg), std::invalid_argument);
    cfg.n = 10;
    cfg.reps = 0;
    CHECK_THROWS_AS(simulate_density(cfg), std::invalid_argument);
    cfg.reps = 5;
    cfg.density_version = 3;
    CHECK_THROWS_AS(simulate_density(cfg), std::invalid_argument);
}
