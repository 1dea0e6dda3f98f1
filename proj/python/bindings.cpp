#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cspcd/digraph.hpp"
#include "cspcd/geometry1d.hpp"
#include "cspcd/geometry2d.hpp"
#include "cspcd/inference.hpp"
#include "cspcd/moments.hpp"
#include "cspcd/montecarlo.hpp"
#include "cspcd/oracle.hpp"
#include "cspcd/stats.hpp"

namespace py = pybind11;
using namespace cspcd;

namespace {

CellKind kind_arg(const std::string& name) {
    if (name == "middle") return CellKind::Middle;
    if (name == "end" || name == "right_end") return CellKind::RightEnd;
    if (name == "left_end") return CellKind::LeftEnd;
    throw py::value_error("kind must be 'middle', 'end', 'left_end' or 'right_end'");
}

Regime regime_arg(const std::string& name) {
    if (name == "middle_c_half") return Regime::MiddleCHalf;
    if (name == "middle_full") return Regime::MiddleFull;
    if (name == "end") return Regime::End;
    throw py::value_error("regime must be 'middle_c_half', 'middle_full' or 'end'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "central similarity proximity catch digraphs on one-dimensional data";

    py::class_<Params>(m, "Params")
        .def(py::init<double, double>(), py::arg("tau"), py::arg("c") = 0.5)
        .def_readonly("tau", &Params::tau)
        .def_readonly("c", &Params::c)
        .def_property_readonly("tau_infinite", &Params::tau_infinite)
        .def("__repr__", [](const Params& p) {
            return "Params(tau=" + std::to_string(p.tau) + ", c=" + std::to_string(p.c) + ")";
        });

    py::class_<RealInterval>(m, "RealInterval")
        .def_readonly("lo", &RealInterval::lo)
        .def_readonly("hi", &RealInterval::hi)
        .def("length", &RealInterval::length)
        .def("contains", &RealInterval::contains)
        .def("__repr__", [](const RealInterval& r) {
            return "(" + std::to_string(r.lo) + ", " + std::to_string(r.hi) + ")";
        });

    py::class_<SupportInterval>(m, "SupportInterval")
        .def(py::init<double, double>(), py::arg("delta1"), py::arg("delta2"))
        .def_readonly("delta1", &SupportInterval::delta1)
        .def_readonly("delta2", &SupportInterval::delta2);

    py::enum_<CellKind>(m, "CellKind")
        .value("LeftEnd", CellKind::LeftEnd)
        .value("Middle", CellKind::Middle)
        .value("RightEnd", CellKind::RightEnd);

    py::class_<Cell>(m, "Cell")
        .def_readonly("lo", &Cell::lo)
        .def_readonly("hi", &Cell::hi)
        .def_readonly("kind", &Cell::kind)
        .def_readonly("weight", &Cell::weight)
        .def("centrality_point", &Cell::centrality_point, py::arg("c"));

    py::class_<IntervalPartition>(m, "IntervalPartition")
        .def_readonly("cells", &IntervalPartition::cells)
        .def_readonly("support", &IntervalPartition::support)
        .def("locate", &IntervalPartition::locate);

    m.def(
        "build_partition",
        [](const SupportInterval& support, const std::vector<double>& anchors,
           bool allow_boundary) {
            return build_partition(support, AnchorSet(anchors), allow_boundary);
        },
        py::arg("support"), py::arg("anchors"), py::arg("allow_boundary") = false);

    m.def("proximity_region", &proximity_region, py::arg("x"), py::arg("params"),
          py::arg("cell"));
    m.def("gamma1_region", &gamma1_region, py::arg("x"), py::arg("params"), py::arg("cell"));

    py::class_<PcdDigraph>(m, "PcdDigraph")
        .def_readonly("vertices", &PcdDigraph::vertices)
        .def_readonly("arcs", &PcdDigraph::arcs)
        .def_readonly("cell_counts", &PcdDigraph::cell_counts)
        .def_readonly("n_total", &PcdDigraph::n_total)
        .def_readonly("n_t", &PcdDigraph::n_t);

    py::class_<DensityReport>(m, "DensityReport")
        .def_readonly("rho_v1", &DensityReport::rho_v1)
        .def_readonly("rho_v2", &DensityReport::rho_v2)
        .def_readonly("per_cell", &DensityReport::per_cell);

    m.def(
        "build_digraph",
        [](const std::vector<double>& xs, const IntervalPartition& partition,
           const Params& params) { return build_digraph(xs, partition, params); },
        py::arg("xs"), py::arg("partition"), py::arg("params"));
    m.def("relative_density", &relative_density, py::arg("digraph"));
    m.def("structural_lower_bound", &structural_lower_bound, py::arg("digraph"),
          py::arg("partition"), py::arg("params"));

    py::class_<MomentPair>(m, "MomentPair")
        .def_readonly("mu", &MomentPair::mu)
        .def_readonly("four_nu", &MomentPair::four_nu);

    py::class_<MixtureMoments>(m, "MixtureMoments")
        .def_readonly("mu_tilde", &MixtureMoments::mu_tilde)
        .def_readonly("four_nu_tilde", &MixtureMoments::four_nu_tilde)
        .def_readonly("mu_breve", &MixtureMoments::mu_breve)
        .def_readonly("four_nu_breve", &MixtureMoments::four_nu_breve)
        .def_readonly("sum_w2", &MixtureMoments::sum_w2);

    m.def("mu_middle", &mu_middle, py::arg("params"));
    m.def("four_nu_middle", &four_nu_middle, py::arg("params"));
    m.def("mu_end", &mu_end, py::arg("tau"));
    m.def("four_nu_end", &four_nu_end, py::arg("tau"));
    m.def("middle_moments", &middle_moments, py::arg("params"));
    m.def("end_moments", &end_moments, py::arg("tau"));
    m.def("mixture_moments", &mixture_moments, py::arg("partition"), py::arg("params"));
    m.def("convergence_rate", &convergence_rate, py::arg("moments"), py::arg("n"));
    m.def(
        "optimal_parameters",
        [](const std::string& regime) {
            const OptimalParams p = optimal_parameters(regime_arg(regime));
            py::dict d;
            d["tau_star"] = p.tau_star;
            d["c_star"] = p.c_star ? py::object(py::float_(*p.c_star)) : py::none();
            d["rate_coefficient"] = p.rate_coefficient;
            return d;
        },
        py::arg("regime"));

    py::class_<CaseProbabilities>(m, "CaseProbabilities")
        .def_readonly("p_a", &CaseProbabilities::p_a)
        .def_readonly("p2n", &CaseProbabilities::p2n)
        .def_readonly("png", &CaseProbabilities::png)
        .def_readonly("p2g", &CaseProbabilities::p2g);

    m.def(
        "case_probabilities",
        [](const Params& params, const std::string& kind, double tol) {
            return case_probabilities(params, kind_arg(kind), tol);
        },
        py::arg("params"), py::arg("kind"), py::arg("tol") = 1e-10);
    m.def("moments_from_probabilities", &moments_from_probabilities, py::arg("cp"));

    py::class_<MCReport>(m, "MCReport")
        .def_readonly("mean", &MCReport::mean)
        .def_readonly("variance", &MCReport::variance)
        .def_readonly("densities", &MCReport::densities)
        .def_readonly("standardized", &MCReport::standardized)
        .def_readonly("ks_stat", &MCReport::ks_stat)
        .def_readonly("ks_pvalue", &MCReport::ks_pvalue)
        .def_readonly("degenerate", &MCReport::degenerate);

    m.def(
        "simulate_density",
        [](int n, int reps, std::uint64_t seed, const Params& params,
           const IntervalPartition& partition, int version, int workers) {
            MCConfig cfg;
            cfg.n = n;
            cfg.reps = reps;
            cfg.seed = seed;
            cfg.params = params;
            cfg.partition = partition;
            cfg.density_version = version;
            cfg.workers = workers;
            return simulate_density(cfg);
        },
        py::arg("n"), py::arg("reps"), py::arg("seed"), py::arg("params"), py::arg("partition"),
        py::arg("version") = 2, py::arg("workers") = 1);
    m.def(
        "normality_diagnostic",
        [](const std::vector<double>& standardized) { return normality_diagnostic(standardized); },
        py::arg("standardized"));
    m.def(
        "joint_h_pmf",
        [](int reps, std::uint64_t seed, const Params& params,
           const IntervalPartition& partition) {
            MCConfig cfg;
            cfg.reps = reps;
            cfg.seed = seed;
            cfg.params = params;
            cfg.partition = partition;
            return joint_h_pmf(cfg);
        },
        py::arg("reps"), py::arg("seed"), py::arg("params"), py::arg("partition"));

    py::class_<TestResult>(m, "TestResult")
        .def_readonly("rho_observed", &TestResult::rho_observed)
        .def_readonly("mu_null", &TestResult::mu_null)
        .def_readonly("four_nu_null", &TestResult::four_nu_null)
        .def_readonly("z", &TestResult::z)
        .def_readonly("p_two_sided", &TestResult::p_two_sided)
        .def_readonly("p_greater", &TestResult::p_greater)
        .def_readonly("p_less", &TestResult::p_less)
        .def_readonly("n_effective", &TestResult::n_effective)
        .def_readonly("version", &TestResult::version);

    m.def(
        "spatial_test",
        [](const std::vector<double>& xs, std::vector<double> anchors,
           const SupportInterval& support, const Params& params, int version) {
            std::sort(anchors.begin(), anchors.end());
            return spatial_test(xs, AnchorSet(anchors), support, params, version);
        },
        py::arg("xs"), py::arg("anchors"), py::arg("support"), py::arg("params"),
        py::arg("version") = 2);

    py::class_<Point>(m, "Point")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readonly("x", &Point::x)
        .def_readonly("y", &Point::y);

    py::class_<Triangle>(m, "Triangle")
        .def(py::init<Point, Point, Point>())
        .def("signed_area", &Triangle::signed_area)
        .def("centroid", &Triangle::centroid)
        .def("barycentric", &Triangle::barycentric);

    py::class_<PlanarRegion>(m, "PlanarRegion")
        .def_readonly("vertices", &PlanarRegion::vertices)
        .def("area", &PlanarRegion::area)
        .def("contains", &PlanarRegion::contains, py::arg("p"), py::arg("eps") = 0.0)
        .def("degenerate", &PlanarRegion::degenerate);

    m.def("edge_region", &edge_region, py::arg("x"), py::arg("triangle"));
    m.def("planar_proximity_region", &planar_proximity_region, py::arg("x"), py::arg("tau"),
          py::arg("triangle"));
    m.def("planar_density_mc", &planar_density_mc, py::arg("n"), py::arg("reps"), py::arg("tau"),
          py::arg("triangle"), py::arg("seed"), py::arg("workers") = 1);

    m.def("normal_cdf", &normal_cdf, py::arg("z"));
    m.def("normal_quantile", &normal_quantile, py::arg("p"));

    m.attr("__version__") = "0.1.0";
}
