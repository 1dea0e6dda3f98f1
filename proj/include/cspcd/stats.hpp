#ifndef CSPCD_STATS_HPP
#define CSPCD_STATS_HPP

#include <span>

namespace cspcd {

/// Standard normal distribution function.
double normal_cdf(double z);

/// Standard normal quantile (Acklam's rational approximation plus one
/// Halley refinement); p in (0,1).
double normal_quantile(double p);

/// Complementary CDF Q(lambda) of the Kolmogorov distribution.
double kolmogorov_q(double lambda);

struct KsResult {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// One-sample Kolmogorov-Smirnov test of the sample against the standard
/// normal, with the asymptotic p-value Q(sqrt(n) D).
KsResult ks_test_standard_normal(std::span<const double> sample);

} // namespace cspcd

#endif
