"""Exact counting of classical lattice-path families.

Truncated formal power series over exact rationals, Riordan arrays and
their sequence transform, closed-form generating functions for ten named
path families, and a brute-force enumerator that independently certifies
every formula.
"""

from latticepaths.series import Series, binomial_series, constant, geometric, polynomial, shift
from latticepaths.riordan import (
    RiordanArray,
    delannoy_array,
    identity_array,
    motzkin_array,
    pascal_array,
    uh_insertion_array,
)
from latticepaths.paths import Path, PathFamily, Step, count_paths, enumerate_paths
from latticepaths.catalog import FAMILIES, Family, catalan, central_binomial, get_family, terms

__version__ = "0.1.0"

__all__ = [
    "Series",
    "binomial_series",
    "constant",
    "geometric",
    "polynomial",
    "shift",
    "RiordanArray",
    "identity_array",
    "pascal_array",
    "delannoy_array",
    "motzkin_array",
    "uh_insertion_array",
    "Path",
    "PathFamily",
    "Step",
    "enumerate_paths",
    "count_paths",
    "FAMILIES",
    "Family",
    "get_family",
    "terms",
    "central_binomial",
    "catalan",
    "__version__",
]
