"""Exact fraction calculus and the classical trees of positive rationals.

The package works with nonnegative fractions in lowest terms, extended by
0/1 and 1/0.  It provides the distance/adjacency/mediant calculus, interval
coordinates, the unique-parent genealogy, the Stern-Brocot, Calkin-Wilf,
Shen-Andreev and Kepler trees with their reduced variants, linear
enumerations of all positive rationals, and bounded-denominator best
approximation.  A compiled kernel extension accelerates the enumeration
loops when present; see ``fractree._backend``.
"""

from fractree._backend import BACKEND
from fractree.fraction import (
    FULL_INTERVAL,
    INF,
    ONE,
    ZERO,
    AdjacencyCase,
    Frac,
    Interval,
    classify_adjacent_pair,
    compare,
    distance,
    is_adjacent,
    mediant,
    mediant_error,
    medidifference,
    normalized_error,
)
from fractree.coordinates import (
    Coordinates,
    coordinate_distance,
    coordinates_of,
    fraction_at,
)
from fractree.genealogy import (
    Handedness,
    ParentPair,
    confining_unit_interval,
    extend,
    fraction_of_path,
    handedness,
    parents,
    path_to,
    subdivide,
)
from fractree.trees import (
    TreeKind,
    TreeNode,
    children,
    iter_rows,
    node_at,
    reduce_tree,
    row,
    rows_equivalent,
)
from fractree.enumerations import (
    Triple,
    cw_sequence,
    fraction_at_index,
    index_of,
    iter_cw_sequence,
    iter_newman,
    newman_successor,
    stern,
    stern_pair,
    triple_children,
    triple_to_ratio,
)
from fractree.approximation import (
    ApproximationResult,
    adjacent_neighbors_within,
    best_bounded,
    verify_adjacency_by_denominators,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "__version__",
    # fraction calculus
    "Frac",
    "Interval",
    "AdjacencyCase",
    "ZERO",
    "ONE",
    "INF",
    "FULL_INTERVAL",
    "compare",
    "distance",
    "is_adjacent",
    "classify_adjacent_pair",
    "mediant",
    "medidifference",
    "normalized_error",
    "mediant_error",
    # coordinates
    "Coordinates",
    "coordinates_of",
    "fraction_at",
    "coordinate_distance",
    # genealogy
    "Handedness",
    "ParentPair",
    "subdivide",
    "extend",
    "parents",
    "handedness",
    "path_to",
    "fraction_of_path",
    "confining_unit_interval",
    # trees
    "TreeKind",
    "TreeNode",
    "children",
    "row",
    "iter_rows",
    "node_at",
    "rows_equivalent",
    "reduce_tree",
    # enumerations
    "stern",
    "stern_pair",
    "cw_sequence",
    "iter_cw_sequence",
    "newman_successor",
    "iter_newman",
    "index_of",
    "fraction_at_index",
    "Triple",
    "triple_children",
    "triple_to_ratio",
    # approximation
    "ApproximationResult",
    "best_bounded",
    "adjacent_neighbors_within",
    "verify_adjacency_by_denominators",
]
