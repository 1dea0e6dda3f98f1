#include "cspcd/geometry2d.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "cspcd/rng.hpp"

namespace cspcd {

namespace {

double cross(Point o, Point a, Point b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

} // namespace

Triangle::Triangle(Point a, Point b, Point c) : v{a, b, c} {
    if (std::abs(signed_area()) < 1e-300 || std::isnan(signed_area()))
        throw std::invalid_argument("Triangle: vertices are collinear");
}

double Triangle::signed_area() const { return 0.5 * cross(v[0], v[1], v[2]); }

Point Triangle::centroid() const {
    return {(v[0].x + v[1].x + v[2].x) / 3.0, (v[0].y + v[1].y + v[2].y) / 3.0};
}

std::array<double, 3> Triangle::barycentric(Point p) const {
    const double area2 = cross(v[0], v[1], v[2]);
    return {cross(p, v[1], v[2]) / area2, cross(p, v[2], v[0]) / area2,
            cross(p, v[0], v[1]) / area2};
}

double PlanarRegion::area() const {
    if (degenerate()) return 0.0;
    double s = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % vertices.size()];
        s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * std::abs(s);
}

bool PlanarRegion::contains(Point p, double eps) const {
    if (degenerate()) return false;
    const double orient = cross(vertices[0], vertices[1], vertices[2]) >= 0.0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& a = vertices[i];
        const Point& b = vertices[(i + 1) % vertices.size()];
        const double len = std::hypot(b.x - a.x, b.y - a.y);
        const double d = orient * cross(a, b, p);
        if (!(d > -eps * std::max(len, 1.0))) return false;  // eps == 0: strict interior
    }
    return true;
}

int edge_region(Point x, const Triangle& t) {
    const std::array<double, 3> b = t.barycentric(x);
    if (!(b[0] > 0.0 && b[1] > 0.0 && b[2] > 0.0))
        throw std::invalid_argument("edge_region: x must be strictly inside the triangle");
    // R_E(e_j) is where the j-th barycentric coordinate is smallest
    int j = 0;
    if (b[1] < b[j]) j = 1;
    if (b[2] < b[j]) j = 2;
    return j;
}

namespace {

// Sutherland-Hodgman clip of a convex subject polygon against the half-plane
// on the inner side of edge (a,b), orientation given by the parent triangle.
std::vector<Point> clip_half_plane(const std::vector<Point>& subject, Point a, Point b,
                                   double orient) {
    std::vector<Point> out;
    const std::size_t n = subject.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& cur = subject[i];
        const Point& nxt = subject[(i + 1) % n];
        const double dc = orient * cross(a, b, cur);
        const double dn = orient * cross(a, b, nxt);
        if (dc >= 0.0) out.push_back(cur);
        if ((dc > 0.0 && dn < 0.0) || (dc < 0.0 && dn > 0.0)) {
            const double s = dc / (dc - dn);
            out.push_back({cur.x + s * (nxt.x - cur.x), cur.y + s * (nxt.y - cur.y)});
        }
    }
    return out;
}

} // namespace

PlanarRegion planar_proximity_region(Point x, double tau, const Triangle& t) {
    if (std::isnan(tau) || tau <= 0.0)
        throw std::invalid_argument("planar_proximity_region: tau must be positive");
    const std::array<double, 3> bx = t.barycentric(x);
    if (bx[0] < 0.0 || bx[1] < 0.0 || bx[2] < 0.0)
        throw std::invalid_argument("planar_proximity_region: x outside the triangle");
    if (bx[0] == 0.0 || bx[1] == 0.0 || bx[2] == 0.0)
        return PlanarRegion{{x}};  // boundary point: singleton region

    if (std::isinf(tau)) return PlanarRegion{{t.v[0], t.v[1], t.v[2]}};

    // d(x, e_j)/h_j equals the j-th barycentric coordinate, so scaling the
    // triangle about x by s = 3 tau b_j puts the edge parallel to e(x) at
    // distance tau d(x, e(x)) while keeping x at the centroid.
    const int j = edge_region(x, t);
    const double s = 3.0 * tau * bx[j];
    const Point g = t.centroid();
    std::vector<Point> poly;
    poly.reserve(3);
    for (int i = 0; i < 3; ++i)
        poly.push_back({x.x + s * (t.v[i].x - g.x), x.y + s * (t.v[i].y - g.y)});

    const double orient = t.signed_area() >= 0.0 ? 1.0 : -1.0;
    for (int e = 0; e < 3; ++e) {
        poly = clip_half_plane(poly, t.v[e], t.v[(e + 1) % 3], orient);
        if (poly.empty()) break;
    }
    PlanarRegion region{std::move(poly)};
    if (region.area() < 1e-14) return PlanarRegion{{x}};
    return region;
}

namespace {

std::array<double, 3> sample_barycentric(SplitMix64& stream) {
    for (;;) {
        double u = stream.next_open01();
        double v = stream.next_open01();
        if (u + v > 1.0) {
            u = 1.0 - u;
            v = 1.0 - v;
        }
        const double w = 1.0 - u - v;
        if (u > 0.0 && v > 0.0 && w > 0.0) return {w, u, v};
    }
}

int smallest_coord(const std::array<double, 3>& b) {
    int j = 0;
    if (b[1] < b[j]) j = 1;
    if (b[2] < b[j]) j = 2;
    return j;
}

// z in N(x, tau): in barycentric coordinates of the parent triangle the
// region is {b : all components of 1/3 + (b - b_x)/s positive}.
bool in_region(const std::array<double, 3>& bx, const std::array<double, 3>& bz, double s) {
    for (int i = 0; i < 3; ++i)
        if (!(1.0 / 3.0 + (bz[i] - bx[i]) / s > 0.0)) return false;
    return true;
}

} // namespace

MCReport planar_density_mc(int n, int reps, double tau, const Triangle& t, std::uint64_t seed,
                           int workers) {
    if (n < 2) throw std::invalid_argument("planar_density_mc: n must be >= 2");
    if (reps < 1) throw std::invalid_argument("planar_density_mc: reps must be >= 1");
    if (std::isnan(tau) || tau <= 0.0)
        throw std::invalid_argument("planar_density_mc: tau must be positive");
    (void)t;  // geometry enters only through barycentric coordinates

    MCReport rep;
    rep.degenerate = std::isinf(tau);
    rep.densities.assign(reps, 0.0);

    auto body = [&](int r) {
        thread_local std::vector<std::array<double, 3>> pts;
        thread_local std::vector<double> scales;
        SplitMix64 stream = replicate_stream(seed, static_cast<std::uint64_t>(r));
        pts.clear();
        scales.clear();
        for (int i = 0; i < n; ++i) {
            pts.push_back(sample_barycentric(stream));
            const auto& b = pts.back();
            scales.push_back(std::isinf(tau) ? tau : 3.0 * tau * b[smallest_coord(b)]);
        }
        std::uint64_t arcs = 0;
        if (std::isinf(tau)) {
            arcs = static_cast<std::uint64_t>(n) * (n - 1);
        } else {
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < n; ++k)
                    if (k != i && in_region(pts[i], pts[k], scales[i])) ++arcs;
        }
        rep.densities[r] =
            static_cast<double>(arcs) / (static_cast<double>(n) * static_cast<double>(n - 1));
    };

    const int nw = resolve_workers(workers);
    if (nw <= 1) {
        for (int r = 0; r < reps; ++r) body(r);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nw; ++w)
            pool.emplace_back([&, w] {
                for (int r = w; r < reps; r += nw) body(r);
            });
        for (auto& th : pool) th.join();
    }

    double sum = 0.0;
    for (double v : rep.densities) sum += v;
    rep.mean = sum / reps;
    double ss = 0.0;
    for (double v : rep.densities) ss += (v - rep.mean) * (v - rep.mean);
    rep.variance = reps > 1 ? ss / (reps - 1) : 0.0;
    rep.ks_stat = std::numeric_limits<double>::quiet_NaN();
    rep.ks_pvalue = std::numeric_limits<double>::quiet_NaN();
    return rep;
}

} // namespace cspcd
