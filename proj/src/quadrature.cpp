#include "cspcd/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace cspcd {

GaussLegendre::GaussLegendre(int order) {
    if (order < 2) throw std::invalid_argument("GaussLegendre: order must be >= 2");
    const int n = order;
    nodes.resize(n);
    weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 64; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

double GaussLegendre::integrate(const std::function<double(double)>& f, double a,
                                double b) const {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(mid + half * nodes[i]);
    return sum * half;
}

double GaussLegendre::integrate_adaptive(const std::function<double(double)>& f, double a,
                                         double b, double abs_tol) const {
    double prev = integrate(f, a, b);
    for (int panels = 2; panels <= 1 << 14; panels *= 2) {
        double sum = 0.0;
        const double step = (b - a) / panels;
        for (int k = 0; k < panels; ++k) sum += integrate(f, a + k * step, a + (k + 1) * step);
        if (std::abs(sum - prev) <= abs_tol) return sum;
        prev = sum;
    }
    return prev;
}

const GaussLegendre& default_rule() {
    static const GaussLegendre rule(20);
    return rule;
}

} // namespace cspcd
