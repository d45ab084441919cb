"""Exact realizations of associahedra and the combinatorics of multiassociahedra."""

from .checks import parallel_facet_pairs, sphericity_check, verify_associahedron, weakly_convex_demo
from .exact import Polytope, affine_dimension, are_antiparallel, convex_hull, triangle_area
from .multi import (
    capoyleas_pach_check,
    cyclic_polytope_boundary_fvector,
    enumerate_k_triangulations,
    f_vector,
    flip_graph_connected,
    jonsson_count,
    purity_and_dimension_check,
    relevant_diagonals,
)
from .polygon import abstract_associahedron, crossing, diagonals, enumerate_triangulations, flip
from .realizations import (
    ClusterParams,
    MinkowskiParams,
    PointConfig2D,
    cluster_associahedron,
    default_cluster_params,
    enumerate_config_triangulations,
    gkz_vector,
    minkowski_associahedron,
    parabola_config,
    secondary_polytope,
)

__version__ = "0.1.0"
