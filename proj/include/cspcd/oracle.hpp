#ifndef CSPCD_ORACLE_HPP
#define CSPCD_ORACLE_HPP

#include "cspcd/moments.hpp"
#include "cspcd/params.hpp"
#include "cspcd/partition.hpp"

namespace cspcd {

/// Arc probability and the three case probabilities of the covariance
/// decomposition, reconstructed by quadrature over region lengths:
///   p_a  = Int len N(x) dx        p2n = Int len(N(x))^2 dx
///   png  = Int len N len G1 dx    p2g = Int len(G1(x))^2 dx
/// over the unit cell. A numerical check of the closed forms that shares no
/// formula with the moments module beyond the region geometry itself.
struct CaseProbabilities {
    double p_a = 0.0;
    double p2n = 0.0;
    double png = 0.0;
    double p2g = 0.0;
    CellKind kind = CellKind::Middle;  ///< Middle or an end kind
};

/// Piecewise Gauss-Legendre quadrature of the four case probabilities, with
/// breakpoints at the exact case boundaries of the region formulas; absolute
/// error <= tol per quantity. tau = inf returns the all-ones limit.
CaseProbabilities case_probabilities(const Params& params, CellKind kind, double tol = 1e-10);

/// (mu, 4 nu) from the covariance identity 4 nu = p2n + 2 png + p2g - 4 p_a^2;
/// negatives within quadrature noise are clamped to zero.
MomentPair moments_from_probabilities(const CaseProbabilities& cp);

} // namespace cspcd

#endif
