#ifndef CSPCD_MONTECARLO_HPP
#define CSPCD_MONTECARLO_HPP

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cspcd/params.hpp"
#include "cspcd/partition.hpp"

namespace cspcd {

/// Configuration of a density simulation. Each replicate draws n uniform
/// points on the support from its own counter-based stream, so the report is
/// a function of (seed, n, reps) alone, independent of the worker count.
struct MCConfig {
    int n = 2;
    int reps = 1;
    std::uint64_t seed = 0;
    Params params;
    IntervalPartition partition;
    int density_version = 2;  ///< 1: |A|/n_T, 2: |A|/(n(n-1))
    int workers = 1;          ///< <= 0 resolves through CSPCD_WORKERS, else 1

    void validate() const;
};

struct MCReport {
    double mean = 0.0;
    double variance = 0.0;          ///< sample variance of the densities
    std::vector<double> densities;  ///< per replicate, replicate order
    std::vector<double> standardized;  ///< sqrt(n)(rho - mu)/sqrt(4 nu); empty when degenerate
    double ks_stat = 0.0;
    double ks_pvalue = 0.0;
    bool degenerate = false;  ///< tau = inf: densities are a.s. constant
};

/// Simulate the configured relative density. Standardization uses the
/// closed-form mixture moments of the partition, never empirical ones: the
/// closed-form constants are the thing under test.
MCReport simulate_density(const MCConfig& cfg);

/// KS distance and asymptotic p-value of standardized replicates against the
/// standard normal; requires at least 20 values.
std::pair<double, double> normality_diagnostic(std::span<const double> standardized);

/// Monte Carlo joint pmf of (2 h12, 2 h13) over {0,1,2}^2 in a single-cell
/// partition; cfg.reps triples are drawn. Entries sum to one.
std::array<std::array<double, 3>, 3> joint_h_pmf(const MCConfig& cfg);

/// Worker-count resolution: positive request wins, else CSPCD_WORKERS, else 1.
int resolve_workers(int requested);

} // namespace cspcd

#endif
