#ifndef CSPCD_PARAMS_HPP
#define CSPCD_PARAMS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace cspcd {

/// Parameter pair of a central similarity PCD: expansion tau and centrality c.
///
/// tau may be +infinity, which is kept as a distinguished value so the
/// whole-cell limit of the proximity region is exact rather than a large-float
/// approximation. c is only meaningful for middle cells.
struct Params {
    double tau = 1.0;  ///< expansion parameter, tau > 0 or +inf
    double c = 0.5;    ///< centrality parameter, 0 < c < 1

    Params() = default;
    Params(double tau_, double c_) : tau(tau_), c(c_) { validate(); }

    bool tau_infinite() const { return std::isinf(tau); }

    void validate() const {
        if (std::isnan(tau) || tau <= 0.0)
            throw std::invalid_argument("Params: tau must be positive (or +inf)");
        if (!(c > 0.0) || !(c < 1.0))
            throw std::invalid_argument("Params: c must lie in (0,1)");
    }

    static constexpr double infinite_tau() {
        return std::numeric_limits<double>::infinity();
    }
};

} // namespace cspcd

#endif
