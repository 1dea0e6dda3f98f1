#ifndef CSPCD_GEOMETRY2D_HPP
#define CSPCD_GEOMETRY2D_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "cspcd/montecarlo.hpp"

namespace cspcd {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// Non-degenerate triangle; orientation is preserved as given.
struct Triangle {
    std::array<Point, 3> v;

    Triangle(Point a, Point b, Point c);

    double signed_area() const;
    Point centroid() const;

    /// Barycentric coordinates of p (sum to 1; all positive iff p is strictly
    /// inside, regardless of the triangle's orientation).
    std::array<double, 3> barycentric(Point p) const;
};

/// Convex polygon (possibly degenerate: a singleton point).
struct PlanarRegion {
    std::vector<Point> vertices;

    bool degenerate() const { return vertices.size() < 3; }
    double area() const;

    /// Interior test; eps > 0 admits points within eps of the boundary.
    bool contains(Point p, double eps = 0.0) const;
};

/// Index (0-based) of the edge region containing x: edge j is opposite
/// vertex j, regions are cut by the segments from the centroid to the
/// vertices. Ties on region boundaries take the smallest index. Throws for
/// x outside or on the triangle boundary.
int edge_region(Point x, const Triangle& t);

/// Central similarity proximity region: the triangle similar to t with the
/// same orientation, centroid pinned at x, scaled so its edge parallel to
/// e(x) lies at distance tau * d(x, e(x)), clipped to t. tau = inf gives t;
/// x on the boundary gives the singleton {x}.
PlanarRegion planar_proximity_region(Point x, double tau, const Triangle& t);

/// Monte Carlo relative density in one triangle. Sampling and membership
/// tests run in barycentric coordinates, so the replicate streams (and the
/// resulting densities) are identical across affine images of t. No closed
/// forms exist here; the report carries empirical moments only.
MCReport planar_density_mc(int n, int reps, double tau, const Triangle& t, std::uint64_t seed,
                           int workers = 1);

} // namespace cspcd

#endif
