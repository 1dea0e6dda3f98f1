#include "cspcd/montecarlo.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "cspcd/digraph.hpp"
#include "cspcd/geometry1d.hpp"
#include "cspcd/moments.hpp"
#include "cspcd/rng.hpp"
#include "cspcd/stats.hpp"

namespace cspcd {

void MCConfig::validate() const {
    params.validate();
    if (n < 2) throw std::invalid_argument("MCConfig: n must be >= 2");
    if (reps < 1) throw std::invalid_argument("MCConfig: reps must be >= 1");
    if (density_version != 1 && density_version != 2)
        throw std::invalid_argument("MCConfig: density_version must be 1 or 2");
    if (partition.cells.empty()) throw std::invalid_argument("MCConfig: empty partition");
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CSPCD_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

namespace {

void sample_support(SplitMix64& stream, const SupportInterval& support, std::vector<double>& xs,
                    int n) {
    xs.clear();
    xs.reserve(n);
    for (int i = 0; i < n; ++i) {
        double x;
        int attempts = 0;
        do {
            x = support.delta1 + stream.next_open01() * support.width();
            if (++attempts > 100)
                throw std::runtime_error("sample_support: support too narrow to sample");
        } while (!(x > support.delta1 && x < support.delta2));
        xs.push_back(x);
    }
}

template <typename Fn>
void run_replicates(int reps, int workers, Fn&& body) {
    if (workers <= 1) {
        for (int r = 0; r < reps; ++r) body(r);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int r = w; r < reps; r += workers) body(r);
        });
    for (auto& t : pool) t.join();
}

} // namespace

MCReport simulate_density(const MCConfig& cfg) {
    cfg.validate();
    MCReport rep;
    rep.degenerate = cfg.params.tau_infinite();

    double mu0 = 1.0, fn0 = 0.0;
    if (!rep.degenerate) {
        const MixtureMoments mix = mixture_moments(cfg.partition, cfg.params);
        mu0 = cfg.density_version == 1 ? mix.mu_breve : mix.mu_tilde;
        fn0 = cfg.density_version == 1 ? mix.four_nu_breve : mix.four_nu_tilde;
        if (!(fn0 > 0.0))
            throw std::domain_error("simulate_density: degenerate null variance (4 nu <= 0)");
    }

    rep.densities.assign(cfg.reps, 0.0);
    const int workers = resolve_workers(cfg.workers);
    run_replicates(cfg.reps, workers, [&](int r) {
        thread_local std::vector<double> xs;
        SplitMix64 stream = replicate_stream(cfg.seed, static_cast<std::uint64_t>(r));
        sample_support(stream, cfg.partition.support, xs, cfg.n);
        const ArcStats stats = count_arcs(xs, cfg.partition, cfg.params);
        double rho = 0.0;
        if (cfg.density_version == 1)
            rho = stats.n_t ? static_cast<double>(stats.arc_count) / static_cast<double>(stats.n_t)
                            : 0.0;
        else
            rho = static_cast<double>(stats.arc_count) /
                  (static_cast<double>(cfg.n) * static_cast<double>(cfg.n - 1));
        rep.densities[r] = rho;
    });

    double sum = 0.0;
    for (double v : rep.densities) sum += v;
    rep.mean = sum / cfg.reps;
    double ss = 0.0;
    for (double v : rep.densities) ss += (v - rep.mean) * (v - rep.mean);
    rep.variance = cfg.reps > 1 ? ss / (cfg.reps - 1) : 0.0;

    if (rep.degenerate) {
        rep.ks_stat = std::numeric_limits<double>::quiet_NaN();
        rep.ks_pvalue = std::numeric_limits<double>::quiet_NaN();
        return rep;
    }
    const double scale = std::sqrt(static_cast<double>(cfg.n)) / std::sqrt(fn0);
    rep.standardized.reserve(cfg.reps);
    for (double v : rep.densities) rep.standardized.push_back(scale * (v - mu0));
    const KsResult ks = ks_test_standard_normal(rep.standardized);
    rep.ks_stat = ks.statistic;
    rep.ks_pvalue = ks.p_value;
    return rep;
}

std::pair<double, double> normality_diagnostic(std::span<const double> standardized) {
    if (standardized.size() < 20)
        throw std::invalid_argument("normality_diagnostic: need at least 20 values");
    const KsResult ks = ks_test_standard_normal(standardized);
    return {ks.statistic, ks.p_value};
}

std::array<std::array<double, 3>, 3> joint_h_pmf(const MCConfig& cfg) {
    cfg.validate();
    if (cfg.partition.cells.size() != 1)
        throw std::invalid_argument("joint_h_pmf: requires a single-cell partition");
    const CellKind kind = cfg.partition.cells[0].kind;
    const Params& params = cfg.params;

    auto region = [&](double t) {
        return kind == CellKind::Middle ? proximity_region_unit_middle(t, params)
                                        : proximity_region_unit_end(t, params.tau);
    };

    std::array<std::array<std::uint64_t, 3>, 3> counts{};
    for (int r = 0; r < cfg.reps; ++r) {
        SplitMix64 stream = replicate_stream(cfg.seed, static_cast<std::uint64_t>(r));
        const double t1 = stream.next_open01();
        const double t2 = stream.next_open01();
        const double t3 = stream.next_open01();
        const RealInterval n1 = region(t1), n2 = region(t2), n3 = region(t3);
        const int h12 = int(n1.contains(t2)) + int(n2.contains(t1));
        const int h13 = int(n1.contains(t3)) + int(n3.contains(t1));
        counts[h12][h13] += 1;
    }
    std::array<std::array<double, 3>, 3> pmf{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            pmf[i][j] = static_cast<double>(counts[i][j]) / static_cast<double>(cfg.reps);
    return pmf;
}

} // namespace cspcd
