"""Gear graph distance matrices, closed-form pseudoinverses, and exact checks."""

__version__ = "0.1.0"

from .circulant import circ, circ_eigen, circulant, s_spectrum, t_spectrum
from .edm import (
    EdmReport,
    balaji_bapat_pinv,
    centering_projector,
    gram_from_edm,
    is_edm,
)
from .eigen import jacobi_eigh, numerical_rank
from .graphs import (
    GearGraph,
    Graph,
    bfs_distances,
    build_gear,
    build_wheel,
    gear_distance_closed,
)
from .laplacian import a_matrix, b_matrix, c_matrices, h_matrix, special_laplacian
from .pinv import (
    PenroseReport,
    beta,
    gear_pinv_formula,
    penrose_check,
    rank_factorization,
    rational_pinv,
    u_vector,
)
from .spectral import lambda_pairs, null_basis, q_vector, theta
from .trees import (
    WeightedTree,
    graham_lovasz_inverse,
    graham_pollak_det,
    tree_distance,
    unit_tree,
    weighted_tree,
    weighted_tree_inverse,
)

__all__ = [
    "EdmReport",
    "GearGraph",
    "Graph",
    "PenroseReport",
    "WeightedTree",
    "__version__",
    "a_matrix",
    "b_matrix",
    "balaji_bapat_pinv",
    "beta",
    "bfs_distances",
    "build_gear",
    "build_wheel",
    "c_matrices",
    "centering_projector",
    "circ",
    "circ_eigen",
    "circulant",
    "gear_distance_closed",
    "gear_pinv_formula",
    "graham_lovasz_inverse",
    "graham_pollak_det",
    "gram_from_edm",
    "h_matrix",
    "is_edm",
    "jacobi_eigh",
    "lambda_pairs",
    "null_basis",
    "numerical_rank",
    "penrose_check",
    "q_vector",
    "rank_factorization",
    "rational_pinv",
    "s_spectrum",
    "special_laplacian",
    "t_spectrum",
    "theta",
    "tree_distance",
    "u_vector",
    "unit_tree",
    "weighted_tree",
    "weighted_tree_inverse",
]
