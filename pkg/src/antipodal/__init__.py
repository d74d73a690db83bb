"""Neighbor/antipode statistics of diameter-1 planar point sets, the
antipodal graph of a discretized convex boundary, thin-annuli intersection
geometry, and the spectral-radius bound chain, with an ε-sweep harness for
scaling-exponent fits."""

from .annuli import (
    AnnulusPairConfig,
    IntersectionVertices,
    NegativeRadicandError,
    cover_count,
    intersection_vertices,
    spans,
    thickened_cover_count,
)
from .boundary import (
    AntipodalGraph,
    BoundaryBoxing,
    Box,
    IsolatedVertexError,
    box_max_distance,
    box_min_distance,
    build_graph,
    common_neighbors,
    discretize_boundary,
    near_set_W,
    neighborhood_degree_sum,
    tail_counts,
)
from .generators import (
    GeneratorSpec,
    arc_center_config,
    circle_config,
    make_config,
    random_disk_config,
    reuleaux_boundary_config,
)
from .geometry import (
    ConvexPolygon,
    DegenerateHullError,
    PairCounts,
    Point,
    PointSet,
    VacuousMarginError,
    boundary_band,
    convex_hull,
    diameter,
    pair_counts,
    ratio_margin,
    read_points,
    write_points,
)
from .harness import (
    ExponentFit,
    SweepAborted,
    SweepRecord,
    fit_exponent,
    sweep_ratio,
    sweep_spectral,
    theorem_margin_report,
)
from .spectral import (
    BoundChainReport,
    NoEdgesError,
    PowerIterationError,
    bound_chain,
    collatz_wielandt_bound,
    lambda1,
    power_iteration,
    sqrt_degree_bound,
    trace_bound,
)

__version__ = "0.1.0"

__all__ = [
    "AnnulusPairConfig",
    "AntipodalGraph",
    "BoundChainReport",
    "BoundaryBoxing",
    "Box",
    "ConvexPolygon",
    "DegenerateHullError",
    "ExponentFit",
    "GeneratorSpec",
    "IntersectionVertices",
    "IsolatedVertexError",
    "NegativeRadicandError",
    "NoEdgesError",
    "PairCounts",
    "Point",
    "PointSet",
    "PowerIterationError",
    "SweepAborted",
    "SweepRecord",
    "VacuousMarginError",
    "arc_center_config",
    "boundary_band",
    "bound_chain",
    "box_max_distance",
    "box_min_distance",
    "build_graph",
    "circle_config",
    "collatz_wielandt_bound",
    "common_neighbors",
    "convex_hull",
    "cover_count",
    "diameter",
    "discretize_boundary",
    "fit_exponent",
    "intersection_vertices",
    "lambda1",
    "make_config",
    "near_set_W",
    "neighborhood_degree_sum",
    "pair_counts",
    "power_iteration",
    "random_disk_config",
    "ratio_margin",
    "read_points",
    "reuleaux_boundary_config",
    "spans",
    "sqrt_degree_bound",
    "sweep_ratio",
    "sweep_spectral",
    "tail_counts",
    "theorem_margin_report",
    "thickened_cover_count",
    "trace_bound",
    "write_points",
]
