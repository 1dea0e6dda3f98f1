#include "cspcd/geometry1d.hpp"

#include <algorithm>
#include <stdexcept>

namespace cspcd {

namespace {

RealInterval clip_unit(double lo, double hi) {
    return {std::max(0.0, lo), std::min(1.0, hi)};
}

} // namespace

RealInterval proximity_region_unit_middle(double t, const Params& params) {
    const double tau = params.tau, c = params.c;
    if (params.tau_infinite()) return {0.0, 1.0};
    // branch at the centrality point; t == c takes the left formula
    if (t <= c)
        return clip_unit(t * (1.0 - tau), t * (c + (1.0 - c) * tau) / c);
    return clip_unit(t - c * tau * (1.0 - t) / (1.0 - c), t + (1.0 - t) * tau);
}

RealInterval proximity_region_unit_end(double t, double tau) {
    if (std::isinf(tau)) return {0.0, 1.0};
    return clip_unit(t * (1.0 - tau), t * (1.0 + tau));
}

RealInterval gamma1_region_unit_middle(double t, const Params& params) {
    const double tau = params.tau, c = params.c;
    if (params.tau_infinite()) return {0.0, 1.0};
    const double g1 = c * t / (c + (1.0 - c) * tau);
    const double g4 = (t * (1.0 - c) + c * tau) / (1.0 - c + c * tau);
    if (tau >= 1.0) return clip_unit(g1, g4);
    if (t < c * (1.0 - tau)) return clip_unit(g1, t / (1.0 - tau));
    if (t < c * (1.0 - tau) + tau) return clip_unit(g1, g4);
    return clip_unit((t - tau) / (1.0 - tau), g4);
}

RealInterval gamma1_region_unit_end(double t, double tau) {
    if (std::isinf(tau)) return {0.0, 1.0};
    const double lo = t / (1.0 + tau);
    if (tau >= 1.0) return {lo, 1.0};
    if (t < 1.0 - tau) return clip_unit(lo, t / (1.0 - tau));
    return {lo, 1.0};
}

namespace {

enum class RegionType { Proximity, Gamma1 };

RealInterval cell_region(double x, const Params& params, const Cell& cell, RegionType type) {
    params.validate();
    if (x == cell.lo || x == cell.hi) return RealInterval::singleton(x);
    if (!(x > cell.lo && x < cell.hi))
        throw std::invalid_argument("region: x not inside the cell");

    const double w = cell.width();
    if (cell.kind == CellKind::Middle) {
        const double t = (x - cell.lo) / w;
        RealInterval r = (type == RegionType::Proximity)
                             ? proximity_region_unit_middle(t, params)
                             : gamma1_region_unit_middle(t, params);
        return {cell.lo + w * r.lo, cell.lo + w * r.hi};
    }
    if (cell.kind == CellKind::RightEnd) {
        // anchor is the left endpoint
        const double t = (x - cell.lo) / w;
        RealInterval r = (type == RegionType::Proximity)
                             ? proximity_region_unit_end(t, params.tau)
                             : gamma1_region_unit_end(t, params.tau);
        return {cell.lo + w * r.lo, cell.lo + w * r.hi};
    }
    // left end cell: anchor is the right endpoint; reflect onto the canonical form
    const double t = (cell.hi - x) / w;
    RealInterval r = (type == RegionType::Proximity)
                         ? proximity_region_unit_end(t, params.tau)
                         : gamma1_region_unit_end(t, params.tau);
    return {cell.hi - w * r.hi, cell.hi - w * r.lo};
}

} // namespace

RealInterval proximity_region(double x, const Params& params, const Cell& cell) {
    return cell_region(x, params, cell, RegionType::Proximity);
}

RealInterval gamma1_region(double x, const Params& params, const Cell& cell) {
    return cell_region(x, params, cell, RegionType::Gamma1);
}

} // namespace cspcd
