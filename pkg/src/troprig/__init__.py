"""Extremality, extremal decompositions and rigidity duality for tropical varieties, in exact arithmetic."""

from .balance import (
    BalanceMatrices,
    ExtremalityCertificate,
    NotATropicalVariety,
    Weighting,
    build_r,
    check_extremal_bound,
    is_balanced,
    is_extremal,
    weighting_space_dim,
)
from .complex import Complex, ComplexError, MaxFace, Ridge, validate, z_vector
from .cone import (
    EnumerationLimitExceeded,
    enumerate_vertices_bruteforce,
    find_vertex,
    positive_weighting,
    weight_cone,
    weight_polytope,
)
from .decompose import Decomposition, decompose, unique_decomposition, verify_decomposition
from .exactq import RatMatrix, hnf, integer_kernel, kernel_basis, left_kernel_basis, rank
from .reciprocal import (
    DualGraph,
    ReciprocalDiagram,
    build_reciprocal,
    check_main_theorem,
    dual_graph,
    weighting_from_diagram,
)
from .rigidity import (
    Framework,
    direction_space,
    is_direction_rigid,
    is_infinitesimally_rigid,
    pebble_game_23,
    perp,
    rigidity_matrix,
)
from .tropcurve import Curve, TropicalPolynomial, curve, dual_subdivision, evaluate, parse_polynomial, structure_report

__all__ = [
    "BalanceMatrices",
    "ExtremalityCertificate",
    "NotATropicalVariety",
    "Weighting",
    "build_r",
    "check_extremal_bound",
    "is_balanced",
    "is_extremal",
    "weighting_space_dim",
    "Complex",
    "ComplexError",
    "MaxFace",
    "Ridge",
    "validate",
    "z_vector",
    "EnumerationLimitExceeded",
    "enumerate_vertices_bruteforce",
    "find_vertex",
    "positive_weighting",
    "weight_cone",
    "weight_polytope",
    "Decomposition",
    "decompose",
    "unique_decomposition",
    "verify_decomposition",
    "RatMatrix",
    "hnf",
    "integer_kernel",
    "kernel_basis",
    "left_kernel_basis",
    "rank",
    "DualGraph",
    "ReciprocalDiagram",
    "build_reciprocal",
    "check_main_theorem",
    "dual_graph",
    "weighting_from_diagram",
    "Framework",
    "direction_space",
    "is_direction_rigid",
    "is_infinitesimally_rigid",
    "pebble_game_23",
    "perp",
    "rigidity_matrix",
    "Curve",
    "TropicalPolynomial",
    "curve",
    "dual_subdivision",
    "evaluate",
    "parse_polynomial",
    "structure_report",
]
__version__ = "0.1.0"
