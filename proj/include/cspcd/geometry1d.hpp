#ifndef CSPCD_GEOMETRY1D_HPP
#define CSPCD_GEOMETRY1D_HPP

#include "cspcd/params.hpp"
#include "cspcd/partition.hpp"

namespace cspcd {

// Canonical regions on the unit cell (0,1). Middle cells branch at t = c;
// end cells are expressed with the anchor at 0 and the support boundary at 1
// (a left end cell maps onto this form by the reflection t -> 1-t).
// Both maps return open intervals; t on {0,1} yields the singleton {t}.

/// N(t,tau,c) on the unit middle cell.
RealInterval proximity_region_unit_middle(double t, const Params& params);

/// N_e(t,tau) on the unit end cell, anchor at 0.
RealInterval proximity_region_unit_end(double t, double tau);

/// Gamma1(t,tau,c) on the unit middle cell: the z with t in N(z,tau,c).
RealInterval gamma1_region_unit_middle(double t, const Params& params);

/// Gamma1_e(t,tau) on the unit end cell, anchor at 0.
RealInterval gamma1_region_unit_end(double t, double tau);

/// Proximity region of x inside a cell of the partition, in global
/// coordinates. x on the cell boundary (equivalently, on an anchor or support
/// endpoint) gives the singleton {x}; x strictly outside the closed cell is
/// rejected. tau = +inf gives the whole open cell.
RealInterval proximity_region(double x, const Params& params, const Cell& cell);

/// Gamma1-region of x inside a cell: all z in the cell with x in N(z).
/// Same boundary conventions as proximity_region.
RealInterval gamma1_region(double x, const Params& params, const Cell& cell);

} // namespace cspcd

#endif
