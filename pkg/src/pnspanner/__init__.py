"""Proximal-navigation graphs over pluggable metric spaces: construction
(complete, half-space proximal, Delaunay, harmonic counterexample family),
exact property checks, greedy routing, and spanner diagnostics."""

from ._backend import BACKEND
from .construct import (
    HspNeighborTrace,
    LuneVerdict,
    build_complete,
    build_counterexample_graph,
    build_delaunay,
    build_hsp,
    check_lune_property,
    symmetrize,
)
from .counterexample import (
    INFINITY,
    CounterexampleSpace,
    FamilyReport,
    PiecewiseConstFn,
    default_eps,
    dx_closed_form,
    dx_measure_oracle,
    family_edge_set,
    family_function,
    harmonic_number,
    max_safe_eps,
    verify_family,
    write_distance_table_csv,
)
from .errors import (
    DegenerateInputError,
    DimensionMismatchError,
    DisconnectedGraphError,
    DuplicatePointError,
    GraphFileError,
    NotPnGraphError,
    ParameterError,
    PnSpannerError,
    PointFileError,
    UnsupportedDimensionError,
)
from .generate import generate_euclidean, generate_hamming
from .metric_core import (
    EuclideanSpace,
    HammingSpace,
    MetricGraph,
    MetricSpace,
    TableSpace,
    Violation,
    check_metric_axioms,
    dist,
    load_points,
    read_graph,
    write_graph,
    write_points,
)
from .navigate import (
    LOCAL_MINIMUM,
    REACHED,
    GreedyRouteStats,
    PnVerdict,
    RouteResult,
    greedy_route_stats,
    greedy_stretch,
    is_pn_graph,
    length_inside_ball,
    proximity_path,
    route_invariant_violations,
)
from .spanner import (
    StretchReport,
    is_t_spanner,
    min_counterexample_index,
    shortest_path_lengths,
    stretch,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CounterexampleSpace",
    "DegenerateInputError",
    "DimensionMismatchError",
    "DisconnectedGraphError",
    "DuplicatePointError",
    "EuclideanSpace",
    "FamilyReport",
    "GraphFileError",
    "GreedyRouteStats",
    "HammingSpace",
    "HspNeighborTrace",
    "INFINITY",
    "LOCAL_MINIMUM",
    "LuneVerdict",
    "MetricGraph",
    "MetricSpace",
    "NotPnGraphError",
    "ParameterError",
    "PiecewiseConstFn",
    "PnSpannerError",
    "PnVerdict",
    "PointFileError",
    "REACHED",
    "RouteResult",
    "StretchReport",
    "TableSpace",
    "UnsupportedDimensionError",
    "Violation",
    "build_complete",
    "build_counterexample_graph",
    "build_delaunay",
    "build_hsp",
    "check_lune_property",
    "check_metric_axioms",
    "default_eps",
    "dist",
    "dx_closed_form",
    "dx_measure_oracle",
    "family_edge_set",
    "family_function",
    "generate_euclidean",
    "generate_hamming",
    "greedy_route_stats",
    "greedy_stretch",
    "harmonic_number",
    "is_pn_graph",
    "is_t_spanner",
    "length_inside_ball",
    "load_points",
    "max_safe_eps",
    "min_counterexample_index",
    "proximity_path",
    "read_graph",
    "route_invariant_violations",
    "shortest_path_lengths",
    "stretch",
    "symmetrize",
    "verify_family",
    "write_distance_table_csv",
    "write_graph",
    "write_points",
]
