"""Central similarity proximity catch digraphs on one-dimensional data.

Thin python facade over the C++ core: interval partitions, proximity and
Gamma1 regions, PCD construction and relative density, closed-form asymptotic
moments with a quadrature oracle, Monte Carlo CLT checks, the spatial-pattern
z-test, and the single-triangle planar extension.
"""

from cspcd._core import (  # noqa: F401
    CaseProbabilities,
    Cell,
    CellKind,
    DensityReport,
    IntervalPartition,
    MCReport,
    MixtureMoments,
    MomentPair,
    Params,
    PcdDigraph,
    PlanarRegion,
    Point,
    RealInterval,
    SupportInterval,
    TestResult,
    Triangle,
    __version__,
    build_digraph,
    build_partition,
    case_probabilities,
    convergence_rate,
    edge_region,
    end_moments,
    four_nu_end,
    four_nu_middle,
    gamma1_region,
    joint_h_pmf,
    middle_moments,
    mixture_moments,
    moments_from_probabilities,
    mu_end,
    mu_middle,
    normal_cdf,
    normal_quantile,
    normality_diagnostic,
    optimal_parameters,
    planar_density_mc,
    planar_proximity_region,
    proximity_region,
    relative_density,
    simulate_density,
    spatial_test,
    structural_lower_bound,
)
