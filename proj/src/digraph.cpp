#include "cspcd/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cspcd {

namespace {

// Local coordinate of x in its cell; end cells map anchor -> 0, boundary -> 1.
double local_coord(double x, const Cell& cell) {
    if (cell.kind == CellKind::LeftEnd) return (cell.hi - x) / cell.width();
    return (x - cell.lo) / cell.width();
}

RealInterval unit_region(double t, const Params& params, CellKind kind) {
    if (kind == CellKind::Middle) return proximity_region_unit_middle(t, params);
    return proximity_region_unit_end(t, params.tau);
}

std::optional<std::size_t> assign_cell(double x, const IntervalPartition& partition) {
    if (std::isnan(x) || !(x > partition.support.delta1 && x < partition.support.delta2))
        throw std::invalid_argument("build_digraph: point outside the support");
    auto it = std::upper_bound(partition.cells.begin(), partition.cells.end(), x,
                               [](double v, const Cell& cell) { return v < cell.hi; });
    if (it == partition.cells.end()) return std::nullopt;
    if (!(x > it->lo)) return std::nullopt;  // coincides with an anchor
    return static_cast<std::size_t>(it - partition.cells.begin());
}

struct Bucket {
    std::vector<double> ts;
    std::vector<std::uint32_t> idx;  // original vertex indices, sorted along ts
};

PcdDigraph skeleton(std::span<const double> xs, const IntervalPartition& partition,
                    std::vector<Bucket>& buckets) {
    PcdDigraph d;
    d.vertices.assign(xs.begin(), xs.end());
    d.n_total = xs.size();
    d.cell_of.resize(xs.size());
    d.cell_counts.assign(partition.cells.size(), 0);
    d.cell_arc_counts.assign(partition.cells.size(), 0);
    buckets.assign(partition.cells.size(), {});

    for (std::uint32_t i = 0; i < xs.size(); ++i) {
        auto cell = assign_cell(xs[i], partition);
        d.cell_of[i] = cell;
        if (!cell) continue;
        d.cell_counts[*cell] += 1;
        Bucket& b = buckets[*cell];
        b.ts.push_back(local_coord(xs[i], partition.cells[*cell]));
        b.idx.push_back(i);
    }
    for (std::size_t k = 0; k < buckets.size(); ++k) {
        Bucket& b = buckets[k];
        std::vector<std::size_t> order(b.ts.size());
        for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t bb) {
            return b.ts[a] < b.ts[bb] || (b.ts[a] == b.ts[bb] && b.idx[a] < b.idx[bb]);
        });
        Bucket sorted;
        sorted.ts.reserve(order.size());
        sorted.idx.reserve(order.size());
        for (std::size_t j : order) {
            sorted.ts.push_back(b.ts[j]);
            sorted.idx.push_back(b.idx[j]);
        }
        b = std::move(sorted);
        d.n_t += static_cast<std::uint64_t>(b.ts.size()) * (b.ts.size() ? b.ts.size() - 1 : 0);
    }
    return d;
}

} // namespace

PcdDigraph build_digraph(std::span<const double> xs, const IntervalPartition& partition,
                         const Params& params) {
    params.validate();
    std::vector<Bucket> buckets;
    PcdDigraph d = skeleton(xs, partition, buckets);

    for (std::size_t k = 0; k < buckets.size(); ++k) {
        const Bucket& b = buckets[k];
        const CellKind kind = partition.cells[k].kind;
        for (std::size_t s = 0; s < b.ts.size(); ++s) {
            const double t = b.ts[s];
            RealInterval r = unit_region(t, params, kind);
            auto first = std::upper_bound(b.ts.begin(), b.ts.end(), r.lo);
            auto last = std::lower_bound(first, b.ts.end(), r.hi);
            for (auto it = first; it != last; ++it) {
                std::size_t j = static_cast<std::size_t>(it - b.ts.begin());
                if (j == s) continue;
                d.arcs.emplace_back(b.idx[s], b.idx[j]);
                d.cell_arc_counts[k] += 1;
            }
        }
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

PcdDigraph build_digraph_naive(std::span<const double> xs, const IntervalPartition& partition,
                               const Params& params) {
    params.validate();
    std::vector<Bucket> buckets;
    PcdDigraph d = skeleton(xs, partition, buckets);

    for (std::size_t k = 0; k < buckets.size(); ++k) {
        const Bucket& b = buckets[k];
        const CellKind kind = partition.cells[k].kind;
        for (std::size_t s = 0; s < b.ts.size(); ++s) {
            RealInterval r = unit_region(b.ts[s], params, kind);
            for (std::size_t j = 0; j < b.ts.size(); ++j) {
                if (j == s) continue;
                if (r.contains(b.ts[j])) {
                    d.arcs.emplace_back(b.idx[s], b.idx[j]);
                    d.cell_arc_counts[k] += 1;
                }
            }
        }
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    return d;
}

ArcStats count_arcs(std::span<const double> xs, const IntervalPartition& partition,
                    const Params& params) {
    ArcStats stats;
    stats.n_total = xs.size();
    const auto& cells = partition.cells;
    thread_local std::vector<std::vector<double>> buckets;
    buckets.resize(cells.size());
    for (auto& b : buckets) b.clear();

    for (double x : xs) {
        auto cell = assign_cell(x, partition);
        if (cell) buckets[*cell].push_back(local_coord(x, cells[*cell]));
    }
    for (std::size_t k = 0; k < buckets.size(); ++k) {
        std::vector<double>& ts = buckets[k];
        std::sort(ts.begin(), ts.end());
        stats.n_t += static_cast<std::uint64_t>(ts.size()) * (ts.empty() ? 0 : ts.size() - 1);
        const CellKind kind = cells[k].kind;
        for (double t : ts) {
            RealInterval r = unit_region(t, params, kind);
            auto first = std::upper_bound(ts.begin(), ts.end(), r.lo);
            auto last = std::lower_bound(first, ts.end(), r.hi);
            stats.arc_count += static_cast<std::uint64_t>(last - first);
            if (r.contains(t)) stats.arc_count -= 1;  // self is not an arc
        }
    }
    return stats;
}

DensityReport relative_density(const PcdDigraph& d) {
    DensityReport rep;
    const double arcs = static_cast<double>(d.arcs.size());
    rep.rho_v1 = d.n_t > 0 ? arcs / static_cast<double>(d.n_t) : 0.0;
    rep.rho_v2 = d.n_total > 1
                     ? arcs / (static_cast<double>(d.n_total) * static_cast<double>(d.n_total - 1))
                     : 0.0;
    rep.per_cell.resize(d.cell_counts.size(), 0.0);
    for (std::size_t k = 0; k < d.cell_counts.size(); ++k) {
        const std::size_t ni = d.cell_counts[k];
        if (ni > 1)
            rep.per_cell[k] = static_cast<double>(d.cell_arc_counts[k]) /
                              (static_cast<double>(ni) * static_cast<double>(ni - 1));
    }
    return rep;
}

double structural_lower_bound(const PcdDigraph& d, const IntervalPartition& partition,
                              const Params& params) {
    params.validate();
    if (!(params.tau >= 1.0))
        throw std::domain_error("structural_lower_bound: only valid for tau >= 1");
    if (d.n_t == 0) return 0.0;

    std::vector<std::uint64_t> left(partition.cells.size(), 0), right(partition.cells.size(), 0);
    for (std::size_t i = 0; i < d.vertices.size(); ++i) {
        if (!d.cell_of[i]) continue;
        const std::size_t k = *d.cell_of[i];
        const Cell& cell = partition.cells[k];
        if (cell.kind != CellKind::Middle) continue;
        const double mc = cell.centrality_point(params.c);
        if (d.vertices[i] < mc)
            left[k] += 1;
        else if (d.vertices[i] > mc)
            right[k] += 1;
    }
    std::uint64_t twice_bound_num = 0;  // 2 (k1 + k2)
    for (std::size_t k = 0; k < partition.cells.size(); ++k) {
        if (partition.cells[k].kind == CellKind::Middle) {
            twice_bound_num += left[k] * (left[k] ? left[k] - 1 : 0);
            twice_bound_num += right[k] * (right[k] ? right[k] - 1 : 0);
        } else {
            const std::uint64_t ni = d.cell_counts[k];
            twice_bound_num += ni * (ni ? ni - 1 : 0);
        }
    }
    return static_cast<double>(twice_bound_num) / (2.0 * static_cast<double>(d.n_t));
}

} // namespace cspcd
