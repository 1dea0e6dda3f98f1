#include "cspcd/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cspcd/geometry1d.hpp"
#include "cspcd/quadrature.hpp"

namespace cspcd {

namespace {

std::vector<double> breakpoints(const Params& params, CellKind kind) {
    const double tau = params.tau, c = params.c;
    std::vector<double> pts{0.0, 1.0};
    auto add = [&pts](double v) {
        if (v > 0.0 && v < 1.0) pts.push_back(v);
    };
    if (kind == CellKind::Middle) {
        add(c);
        add(c * (1.0 - tau));
        add(c * (1.0 - tau) + tau);
        add(c / (c + (1.0 - c) * tau));
        add(c * tau / (1.0 - c + c * tau));
    } else {
        add(1.0 - tau);
        add(1.0 / (1.0 + tau));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

} // namespace

CaseProbabilities case_probabilities(const Params& params, CellKind kind, double tol) {
    params.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("case_probabilities: tol must be positive");
    CaseProbabilities cp;
    cp.kind = kind;
    if (params.tau_infinite()) {
        cp.p_a = cp.p2n = cp.png = cp.p2g = 1.0;
        return cp;
    }

    const bool middle = (kind == CellKind::Middle);
    auto len_n = [&](double t) {
        RealInterval r = middle ? proximity_region_unit_middle(t, params)
                                : proximity_region_unit_end(t, params.tau);
        return r.length();
    };
    auto len_g = [&](double t) {
        RealInterval r = middle ? gamma1_region_unit_middle(t, params)
                                : gamma1_region_unit_end(t, params.tau);
        return r.length();
    };

    const std::vector<double> bps = breakpoints(params, kind);
    const GaussLegendre& rule = default_rule();
    const double piece_tol = tol / (4.0 * static_cast<double>(bps.size()));
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const double a = bps[i], b = bps[i + 1];
        cp.p_a += rule.integrate_adaptive(len_n, a, b, piece_tol);
        cp.p2n += rule.integrate_adaptive([&](double t) { return len_n(t) * len_n(t); }, a, b,
                                          piece_tol);
        cp.png += rule.integrate_adaptive([&](double t) { return len_n(t) * len_g(t); }, a, b,
                                          piece_tol);
        cp.p2g += rule.integrate_adaptive([&](double t) { return len_g(t) * len_g(t); }, a, b,
                                          piece_tol);
    }
    return cp;
}

MomentPair moments_from_probabilities(const CaseProbabilities& cp) {
    MomentPair m;
    m.mu = cp.p_a;
    m.four_nu = cp.p2n + 2.0 * cp.png + cp.p2g - 4.0 * cp.p_a * cp.p_a;
    if (m.four_nu < 0.0 && m.four_nu > -1e-9) m.four_nu = 0.0;
    return m;
}

} // namespace cspcd
