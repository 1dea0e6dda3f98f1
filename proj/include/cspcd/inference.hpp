#ifndef CSPCD_INFERENCE_HPP
#define CSPCD_INFERENCE_HPP

#include <cstdint>
#include <span>

#include "cspcd/params.hpp"
#include "cspcd/partition.hpp"

namespace cspcd {

/// Z-test of an observed relative density against the uniform null.
/// Which tail segregation or association moves the density to is not settled
/// for this family in 1-D, so both one-sided p-values are reported and the
/// two-sided test is the default reading.
struct TestResult {
    double rho_observed = 0.0;
    double mu_null = 0.0;
    double four_nu_null = 0.0;
    double z = 0.0;
    double p_two_sided = 1.0;
    double p_greater = 0.5;
    double p_less = 0.5;
    std::int64_t n_effective = 0;
    int version = 2;
};

/// Standardize an observed density against null moments (mu, 4 nu).
TestResult standardize_density(double rho, double mu_null, double four_nu_null, std::int64_t n,
                               int version);

/// Build the anchor-induced partition, compute the observed density of the
/// requested version and its null mixture moments, and return the z-test.
/// Requires n >= 2, finite tau, and a non-degenerate null variance.
TestResult spatial_test(std::span<const double> xs, const AnchorSet& anchors,
                        const SupportInterval& support, const Params& params, int version = 2);

} // namespace cspcd

#endif
