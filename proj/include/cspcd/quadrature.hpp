#ifndef CSPCD_QUADRATURE_HPP
#define CSPCD_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace cspcd {

/// Gauss-Legendre rule of the given order on [-1,1]; nodes by Newton
/// iteration on the Legendre recurrence, accurate to machine precision.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int order);

    /// Single-panel integral of f over [a,b].
    double integrate(const std::function<double(double)>& f, double a, double b) const;

    /// Composite integral with the panel count doubled until two successive
    /// refinements agree within abs_tol (the integrands here are piecewise
    /// polynomial, so one panel per smooth piece is already exact).
    double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double abs_tol) const;
};

/// Shared order-20 rule.
const GaussLegendre& default_rule();

} // namespace cspcd

#endif
