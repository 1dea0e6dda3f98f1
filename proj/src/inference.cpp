#include "cspcd/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cspcd/digraph.hpp"
#include "cspcd/moments.hpp"
#include "cspcd/stats.hpp"

namespace cspcd {

TestResult standardize_density(double rho, double mu_null, double four_nu_null, std::int64_t n,
                               int version) {
    if (n < 2) throw std::invalid_argument("standardize_density: n must be >= 2");
    if (!(four_nu_null > 0.0))
        throw std::domain_error(
            "standardize_density: degenerate null variance; calibrate the null by Monte Carlo "
            "simulation instead");
    TestResult res;
    res.rho_observed = rho;
    res.mu_null = mu_null;
    res.four_nu_null = four_nu_null;
    res.n_effective = n;
    res.version = version;
    res.z = std::sqrt(static_cast<double>(n)) * (rho - mu_null) / std::sqrt(four_nu_null);
    res.p_less = normal_cdf(res.z);
    res.p_greater = 1.0 - res.p_less;  // keeps p_greater + p_less == 1 exactly
    res.p_two_sided = 2.0 * std::min(res.p_less, res.p_greater);
    return res;
}

TestResult spatial_test(std::span<const double> xs, const AnchorSet& anchors,
                        const SupportInterval& support, const Params& params, int version) {
    params.validate();
    if (version != 1 && version != 2)
        throw std::invalid_argument("spatial_test: version must be 1 or 2");
    if (xs.size() < 2) throw std::invalid_argument("spatial_test: need at least 2 points");
    if (params.tau_infinite())
        throw std::domain_error("spatial_test: tau = inf is degenerate (density is a.s. 1)");

    const IntervalPartition partition = build_partition(support, anchors, true);
    const MixtureMoments mix = mixture_moments(partition, params);
    const double mu0 = version == 1 ? mix.mu_breve : mix.mu_tilde;
    const double fn0 = version == 1 ? mix.four_nu_breve : mix.four_nu_tilde;

    const ArcStats stats = count_arcs(xs, partition, params);
    const double n = static_cast<double>(xs.size());
    double rho = 0.0;
    if (version == 1)
        rho = stats.n_t ? static_cast<double>(stats.arc_count) / static_cast<double>(stats.n_t)
                        : 0.0;
    else
        rho = static_cast<double>(stats.arc_count) / (n * (n - 1.0));
    return standardize_density(rho, mu0, fn0, static_cast<std::int64_t>(xs.size()), version);
}

} // namespace cspcd
