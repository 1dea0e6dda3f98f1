#include "cspcd/moments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cspcd {

namespace {

// kappa1: middle-cell variance for 0 < tau < 1.
double kappa1(double tau, double c) {
    const double t = tau;
    const double num = c * c * t * t * t - 3.0 * c * c * t * t - c * t * t * t +
                       2.0 * c * c * t + 3.0 * c * t * t - c * c - 2.0 * c * t - t * t + c + t;
    return t * t * num / (3.0 * (c * t - c + 1.0) * (c + t - c * t));
}

// kappa2: middle-cell variance for tau >= 1. The long printed numerator is
// Horner-evaluated in tau; its coefficients factor through u = c(1-c) and
// q = 2c^2 - 2c + 1.
double kappa2(double tau, double c) {
    const double u = c * (1.0 - c);
    const double q = 2.0 * c * c - 2.0 * c + 1.0;
    const double c5 = -u * q;              // tau^5: 2c^4 - 4c^3 + 3c^2 - c
    const double c4 = -7.0 * u * u;        // tau^4: -7c^4 + 14c^3 - 7c^2
    const double c3 = -4.0 * u * q;        // tau^3: 8c^4 - 16c^3 + 12c^2 - 4c
    const double c2 = -(q * q - 2.0 * u * u);  // tau^2: -(c^4 + (1-c)^4)
    const double c1 = u * q;               // tau^1: -2c^4 + 4c^3 - 3c^2 + c
    const double c0 = u * u;               // tau^0: c^2 (1-c)^2
    const double poly = ((((c5 * tau + c4) * tau + c3) * tau + c2) * tau + c1) * tau + c0;
    const double a = c * tau - c + 1.0;
    const double b = c * tau - c - tau;
    return u * poly / (3.0 * a * a * a * b * b * b);
}

double fold_c(double c) { return c <= 0.5 ? c : 1.0 - c; }

} // namespace

double mu_middle(const Params& params) {
    params.validate();
    if (params.tau_infinite()) return 1.0;
    const double tau = params.tau;
    const double c = fold_c(params.c);
    if (tau < 1.0) return tau / 2.0;
    return tau * (1.0 + 2.0 * c * (tau - 1.0) * (1.0 - c)) /
           (2.0 * (c * tau - c + 1.0) * (tau + c - c * tau));
}

double four_nu_middle(const Params& params) {
    params.validate();
    if (params.tau_infinite()) return 0.0;
    const double c = fold_c(params.c);
    return params.tau < 1.0 ? kappa1(params.tau, c) : kappa2(params.tau, c);
}

double mu_end(double tau) {
    if (std::isnan(tau) || tau <= 0.0) throw std::invalid_argument("mu_end: tau must be positive");
    if (std::isinf(tau)) return 1.0;
    if (tau < 1.0) return tau * (tau + 2.0) / (2.0 * (tau + 1.0));
    return (1.0 + 2.0 * tau) / (2.0 * (tau + 1.0));
}

double four_nu_end(double tau) {
    if (std::isnan(tau) || tau <= 0.0)
        throw std::invalid_argument("four_nu_end: tau must be positive");
    if (std::isinf(tau)) return 0.0;
    const double t1 = tau + 1.0;
    if (tau < 1.0)
        return tau * tau * (4.0 * tau + 4.0 - 2.0 * tau * tau * tau * tau -
                            4.0 * tau * tau * tau - tau * tau) /
               (3.0 * t1 * t1 * t1);
    return tau * tau / (3.0 * t1 * t1 * t1);
}

MomentPair middle_moments(const Params& params) {
    return {mu_middle(params), four_nu_middle(params)};
}

MomentPair end_moments(double tau) {
    return {mu_end(tau), four_nu_end(tau)};
}

MixtureMoments mixture_moments(const IntervalPartition& partition, const Params& params) {
    params.validate();
    if (params.tau_infinite())
        throw std::domain_error("mixture_moments: degenerate at tau = inf");

    double w2_mid = 0.0, w2_end = 0.0, w3_mid = 0.0, w3_end = 0.0;
    for (const Cell& cell : partition.cells) {
        const double w2 = cell.weight * cell.weight;
        const double w3 = w2 * cell.weight;
        if (cell.kind == CellKind::Middle) {
            w2_mid += w2;
            w3_mid += w3;
        } else {
            w2_end += w2;
            w3_end += w3;
        }
    }
    const double sum_w2 = w2_mid + w2_end;
    if (!(sum_w2 > 0.0)) throw std::invalid_argument("mixture_moments: all weights vanish");

    const double mu_m = w2_mid > 0.0 ? mu_middle(params) : 0.0;
    const double nu_m = w2_mid > 0.0 ? four_nu_middle(params) : 0.0;
    const double mu_e = w2_end > 0.0 ? mu_end(params.tau) : 0.0;
    const double nu_e = w2_end > 0.0 ? four_nu_end(params.tau) : 0.0;

    // second-moment sums per kind via 4 E[h12 h13] = 4 nu + 4 mu^2
    const double s_mid = nu_m + 4.0 * mu_m * mu_m;
    const double s_end = nu_e + 4.0 * mu_e * mu_e;

    MixtureMoments mix;
    mix.sum_w2 = sum_w2;
    mix.mu_tilde = mu_m * w2_mid + mu_e * w2_end;
    mix.four_nu_tilde = s_mid * w3_mid + s_end * w3_end - 4.0 * mix.mu_tilde * mix.mu_tilde;
    mix.mu_breve = mix.mu_tilde / sum_w2;
    mix.four_nu_breve = mix.four_nu_tilde / (sum_w2 * sum_w2);
    // collapse exactly onto the single-kind moments when the other kind is absent
    if (w2_end == 0.0) mix.mu_breve = mu_m;
    if (w2_mid == 0.0) mix.mu_breve = mu_e;
    return mix;
}

double convergence_rate(const MomentPair& moments, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("convergence_rate: n must be >= 1");
    if (!(moments.four_nu > 0.0))
        throw std::domain_error("convergence_rate: degenerate distribution (4 nu <= 0)");
    const double fn = moments.four_nu;
    return moments.mu / std::sqrt(static_cast<double>(n) * fn * fn * fn);
}

namespace {

template <typename F>
double golden_min(F f, double a, double b, double tol) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

double rate_at(double tau, double c, bool end) {
    MomentPair m = end ? end_moments(tau) : middle_moments(Params{tau, c});
    return convergence_rate(m, 1);
}

// coarse bracket over a log-spaced tau grid, then golden-section
double minimize_tau(double c, bool end) {
    double best_tau = 1.0, best = rate_at(1.0, c, end);
    for (int i = 0; i <= 400; ++i) {
        const double tau = 0.02 * (i + 1);  // (0.02, 8.02]
        const double r = rate_at(tau, c, end);
        if (r < best) {
            best = r;
            best_tau = tau;
        }
    }
    const double lo = std::max(1e-4, best_tau - 0.02);
    const double hi = best_tau + 0.02;
    return golden_min([&](double t) { return rate_at(t, c, end); }, lo, hi, 1e-10);
}

} // namespace

OptimalParams optimal_parameters(Regime regime) {
    OptimalParams out;
    switch (regime) {
        case Regime::MiddleCHalf:
            out.tau_star = minimize_tau(0.5, false);
            out.rate_coefficient = rate_at(out.tau_star, 0.5, false);
            return out;
        case Regime::End:
            out.tau_star = minimize_tau(0.5, true);
            out.rate_coefficient = rate_at(out.tau_star, 0.5, true);
            return out;
        case Regime::MiddleFull: {
            // Joint stationary point on the tau >= 1 branch. The rate surface
            // has a second, lower stationary point on the tau < 1 branch that
            // collapses onto the c = 1/2 slice minimum (Regime::MiddleCHalf);
            // this regime reports the tau >= 1 optimum.
            double b_tau = 1.0, b_c = 0.5, best = rate_at(1.0, 0.5, false);
            for (int i = 0; i <= 140; ++i)
                for (int j = 1; j <= 49; ++j) {
                    const double ti = 1.0 + 0.05 * i, cj = 0.02 * j;
                    const double r = rate_at(ti, cj, false);
                    if (r < best) {
                        best = r;
                        b_tau = ti;
                        b_c = cj;
                    }
                }
            double tau = b_tau, c = b_c;
            for (int round = 0; round < 4; ++round) {
                tau = golden_min([&](double t) { return rate_at(t, c, false); },
                                 std::max(1.0, tau - 0.1), tau + 0.1, 1e-10);
                c = golden_min([&](double cc) { return rate_at(tau, cc, false); },
                               std::max(1e-4, c - 0.05), std::min(1.0 - 1e-4, c + 0.05), 1e-10);
            }
            out.tau_star = tau;
            out.c_star = c;
            out.rate_coefficient = rate_at(tau, c, false);
            return out;
        }
    }
    throw std::logic_error("optimal_parameters: unknown regime");
}

} // namespace cspcd
