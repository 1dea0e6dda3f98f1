#ifndef CSPCD_MOMENTS_HPP
#define CSPCD_MOMENTS_HPP

#include <cstdint>
#include <optional>

#include "cspcd/params.hpp"
#include "cspcd/partition.hpp"

namespace cspcd {

/// Asymptotic mean mu and asymptotic variance 4*nu of sqrt(n)(rho - mu).
/// four_nu is 0 exactly at the degenerate limits tau -> 0 and tau = inf.
struct MomentPair {
    double mu = 0.0;
    double four_nu = 0.0;
};

/// Mixture moments over an anchor-induced partition, conditional on the
/// anchors. Tilde quantities standardize the version-II density |A|/(n(n-1)),
/// breve quantities the version-I density |A|/n_T, related by the Sum(w_i^2)
/// rescaling.
struct MixtureMoments {
    double mu_tilde = 0.0;
    double four_nu_tilde = 0.0;
    double mu_breve = 0.0;
    double four_nu_breve = 0.0;
    double sum_w2 = 0.0;
};

/// Arc probability mu(tau,c) in a middle cell. Piecewise: tau/2 below tau=1,
/// a rational expression above, 1 at tau=inf; symmetric under c <-> 1-c.
double mu_middle(const Params& params);

/// Asymptotic variance 4*nu(tau,c) in a middle cell (kappa1 below tau=1,
/// kappa2 above, 0 at tau=inf); symmetric under c <-> 1-c.
double four_nu_middle(const Params& params);

/// Arc probability mu_e(tau) in an end cell.
double mu_end(double tau);

/// Asymptotic variance 4*nu_e(tau) in an end cell.
double four_nu_end(double tau);

MomentPair middle_moments(const Params& params);
MomentPair end_moments(double tau);

/// Mixture moments for the partition at finite tau.
/// The per-kind second-moment sums P_2N + 2 P_NG + P_2G enter through the
/// covariance identity 4 E[h12 h13] = 4 nu + 4 mu^2.
MixtureMoments mixture_moments(const IntervalPartition& partition, const Params& params);

/// Convergence-rate bound of the CLT up to the universal constant:
/// mu / sqrt(n (4 nu)^3). Throws std::domain_error when four_nu <= 0.
double convergence_rate(const MomentPair& moments, std::int64_t n);

enum class Regime { MiddleCHalf, MiddleFull, End };

struct OptimalParams {
    double tau_star = 0.0;
    std::optional<double> c_star;   ///< present for Regime::MiddleFull
    double rate_coefficient = 0.0;  ///< rate at the minimizer with n = 1
};

/// Deterministic minimizer of the convergence rate over tau (and c for the
/// joint middle regime): coarse grid bracket + golden-section refinement.
/// MiddleCHalf and End search all tau > 0; MiddleFull reports the joint
/// stationary point of the tau >= 1 branch (the global optimum over all tau
/// lies on the tau < 1 branch at c = 1/2 and coincides with MiddleCHalf).
OptimalParams optimal_parameters(Regime regime);

} // namespace cspcd

#endif
