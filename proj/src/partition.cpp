#include "cspcd/partition.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cspcd {

SupportInterval::SupportInterval(double d1, double d2) : delta1(d1), delta2(d2) {
    if (!std::isfinite(d1) || !std::isfinite(d2) || !(d1 < d2))
        throw std::invalid_argument("SupportInterval: requires finite delta1 < delta2");
}

std::optional<std::size_t> IntervalPartition::locate(double x) const {
    if (!(x >= support.delta1 && x <= support.delta2))
        throw std::invalid_argument("locate: point outside the support");
    if (x == support.delta1 || x == support.delta2) return std::nullopt;
    for (double a : anchors.points)
        if (x == a) return std::nullopt;
    // cells are ordered and tile the support
    auto it = std::upper_bound(cells.begin(), cells.end(), x,
                               [](double v, const Cell& cell) { return v < cell.hi; });
    if (it == cells.end()) it = std::prev(cells.end());
    return static_cast<std::size_t>(it - cells.begin());
}

std::size_t IntervalPartition::middle_count() const {
    std::size_t k = 0;
    for (const Cell& c : cells) k += (c.kind == CellKind::Middle);
    return k;
}

std::size_t IntervalPartition::end_count() const {
    return cells.size() - middle_count();
}

IntervalPartition build_partition(const SupportInterval& support,
                                  const AnchorSet& anchors,
                                  bool allow_boundary) {
    if (anchors.points.empty())
        throw std::invalid_argument("build_partition: at least one anchor required");
    double prev = support.delta1;
    for (std::size_t i = 0; i < anchors.points.size(); ++i) {
        double a = anchors.points[i];
        if (std::isnan(a) || std::isinf(a))
            throw std::invalid_argument("build_partition: anchor must be finite");
        bool inside = support.contains_strict(a);
        bool boundary = (a == support.delta1 || a == support.delta2);
        if (!inside && !(allow_boundary && boundary))
            throw std::invalid_argument("build_partition: anchor outside the support");
        if (i > 0 && !(a > anchors.points[i - 1]))
            throw std::invalid_argument("build_partition: anchors must be strictly increasing");
        prev = a;
    }
    (void)prev;

    IntervalPartition part;
    part.support = support;
    part.anchors = anchors;

    std::vector<double> bounds;
    bounds.push_back(support.delta1);
    for (double a : anchors.points) bounds.push_back(a);
    bounds.push_back(support.delta2);

    const double total = support.width();
    const std::size_t ncell = bounds.size() - 1;
    for (std::size_t i = 0; i < ncell; ++i) {
        double lo = bounds[i], hi = bounds[i + 1];
        if (!(lo < hi)) continue;  // zero-width end cell from a boundary anchor
        Cell cell;
        cell.lo = lo;
        cell.hi = hi;
        cell.weight = (hi - lo) / total;
        if (i == 0)
            cell.kind = CellKind::LeftEnd;
        else if (i + 1 == ncell)
            cell.kind = CellKind::RightEnd;
        else
            cell.kind = CellKind::Middle;
        part.cells.push_back(cell);
    }
    if (part.cells.empty())
        throw std::invalid_argument("build_partition: degenerate partition");
    return part;
}

} // namespace cspcd
