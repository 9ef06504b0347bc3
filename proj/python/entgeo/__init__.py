"""Bayesian order on probability simplices.

Exact-rational order queries, coordinate decomposition, Shannon entropy, and
the order-theoretic state-space construction, backed by the C++ core.
"""

from ._entgeo import (
    Dist,
    EntgeoError,
    Perm,
    bottom,
    check_classical_iso,
    classical_grid,
    coordinates,
    is_maximal,
    joint_monotonization,
    leq,
    leq_inductive,
    mix,
    shannon,
    simplex_grid,
    sup_coordinates,
    verify,
)

__all__ = [
    "Dist",
    "EntgeoError",
    "Perm",
    "bottom",
    "check_classical_iso",
    "classical_grid",
    "coordinates",
    "is_maximal",
    "joint_monotonization",
    "leq",
    "leq_inductive",
    "mix",
    "shannon",
    "simplex_grid",
    "sup_coordinates",
    "verify",
]
