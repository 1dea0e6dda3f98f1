#ifndef CSPCD_PARTITION_HPP
#define CSPCD_PARTITION_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace cspcd {

/// Open interval treated as a set; lo == hi encodes a degenerate singleton.
struct RealInterval {
    double lo = 0.0;
    double hi = 0.0;

    double length() const { return hi - lo; }
    bool degenerate() const { return !(lo < hi); }

    /// Strict open-interval membership. Boundary points are never members.
    bool contains(double x) const { return x > lo && x < hi; }

    static RealInterval singleton(double x) { return {x, x}; }
};

/// Support interval (delta1, delta2) of the X distribution.
struct SupportInterval {
    double delta1 = 0.0;
    double delta2 = 1.0;

    SupportInterval() = default;
    SupportInterval(double d1, double d2);

    double width() const { return delta2 - delta1; }
    bool contains_strict(double x) const { return x > delta1 && x < delta2; }
};

/// Strictly increasing anchor points (the Y order statistics) inside the
/// support. With allow_boundary, anchors may coincide with the support
/// endpoints; the adjacent end cell then has zero width and is omitted.
struct AnchorSet {
    std::vector<double> points;

    AnchorSet() = default;
    explicit AnchorSet(std::vector<double> pts) : points(std::move(pts)) {}

    std::size_t size() const { return points.size(); }
};

enum class CellKind { LeftEnd, Middle, RightEnd };

/// One cell of the anchor-induced partition of the support.
struct Cell {
    double lo = 0.0;
    double hi = 1.0;
    CellKind kind = CellKind::Middle;
    double weight = 1.0;  ///< (hi-lo)/(delta2-delta1)

    double width() const { return hi - lo; }

    /// Centrality point M_c dividing the cell in ratios c : 1-c.
    /// Only meaningful for middle cells.
    double centrality_point(double c) const { return lo + c * (hi - lo); }
};

/// The m+1 cells induced by m anchors, tiling the support left to right.
/// Zero-width end cells (boundary anchors) are omitted.
struct IntervalPartition {
    SupportInterval support;
    AnchorSet anchors;
    std::vector<Cell> cells;

    /// Index of the cell whose open interior contains x, or nullopt when x
    /// coincides with an anchor or a support endpoint.
    /// Throws std::invalid_argument for x outside the support.
    std::optional<std::size_t> locate(double x) const;

    std::size_t middle_count() const;
    std::size_t end_count() const;
};

/// Build the partition from anchors, assigning kinds and weights.
/// Anchors must be strictly increasing; with allow_boundary they may equal
/// the support endpoints (e.g. anchors {delta1, delta2} yield one middle
/// cell). Invalid anchors are rejected with std::invalid_argument.
IntervalPartition build_partition(const SupportInterval& support,
                                  const AnchorSet& anchors,
                                  bool allow_boundary = false);

} // namespace cspcd

#endif
