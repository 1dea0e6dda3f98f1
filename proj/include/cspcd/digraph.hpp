#ifndef CSPCD_DIGRAPH_HPP
#define CSPCD_DIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cspcd/geometry1d.hpp"
#include "cspcd/params.hpp"
#include "cspcd/partition.hpp"

namespace cspcd {

/// Vertex-random PCD materialized from data. Arcs never cross cells; a vertex
/// coincident with an anchor keeps its slot but belongs to no cell and has a
/// singleton region, so it carries no arcs.
struct PcdDigraph {
    std::vector<double> vertices;                     ///< X sample, input order
    std::vector<std::optional<std::size_t>> cell_of;  ///< per-vertex cell index
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;  ///< (i,j): X_j in N(X_i)
    std::vector<std::size_t> cell_counts;             ///< n_i per cell
    std::vector<std::size_t> cell_arc_counts;         ///< |A_[i]| per cell
    std::size_t n_total = 0;                          ///< number of vertices
    std::uint64_t n_t = 0;                            ///< sum n_i (n_i - 1)
};

/// Relative densities of a digraph: version I (|A|/n_T), version II
/// (|A|/(n(n-1))), and the per-cell mixture components.
struct DensityReport {
    double rho_v1 = 0.0;
    double rho_v2 = 0.0;
    std::vector<double> per_cell;
};

/// Build the PCD over xs with per-cell sorting and interval stabbing,
/// O(n log n + |A|). Points outside the support are rejected with
/// std::invalid_argument; points equal to an anchor become arc-free vertices.
PcdDigraph build_digraph(std::span<const double> xs, const IntervalPartition& partition,
                         const Params& params);

/// Reference O(n^2) construction testing every ordered pair directly.
PcdDigraph build_digraph_naive(std::span<const double> xs, const IntervalPartition& partition,
                               const Params& params);

DensityReport relative_density(const PcdDigraph& d);

/// Lower bound (k1+k2)/n_T of the relative density, valid for tau >= 1
/// (std::domain_error otherwise). k1 sums the ordered pairs within each side
/// of M_c in middle cells, k2 the ordered pairs in end cells, halved.
double structural_lower_bound(const PcdDigraph& d, const IntervalPartition& partition,
                              const Params& params);

/// Count-only arc statistics, used by the Monte Carlo driver where
/// materializing the arc list would dominate the run time.
struct ArcStats {
    std::uint64_t arc_count = 0;
    std::uint64_t n_t = 0;
    std::size_t n_total = 0;
};

ArcStats count_arcs(std::span<const double> xs, const IntervalPartition& partition,
                    const Params& params);

} // namespace cspcd

#endif
