"""Finite lattice computations: semidistributivity, congruences, doubling, gluing."""

from ._core import (
    FiniteLattice,
    LatticeError,
    catalog,
    catalog_names,
    check,
    congruences,
    count_lattices,
    double,
    from_json,
    glue,
    identify,
    is_isomorphic,
    to_json,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "FiniteLattice",
    "LatticeError",
    "catalog",
    "catalog_names",
    "check",
    "congruences",
    "count_lattices",
    "double",
    "from_json",
    "glue",
    "identify",
    "is_isomorphic",
    "to_json",
    "verify",
    "__version__",
]
