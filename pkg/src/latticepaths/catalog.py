"""The ten counted path families and their interlocking descriptions.

Every family carries four independent routes to the same numbers:

* ``formula`` - a closed binomial sum,
* ``gf`` - coefficients of a closed-form generating function built from
  exact series arithmetic,
* ``riordan`` - a named triangular array applied to the central-binomial
  or Catalan base sequence by direct row sums,
* ``brute`` - exhaustive path enumeration.

The whole package exists so these four can be played against each other;
``gf`` additionally cross-checks its simplified radical against the raw
composed form on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from latticepaths.paths import PathFamily, Step, enumerate_paths
from latticepaths.riordan import (
    RiordanArray,
    delannoy_array,
    identity_array,
    motzkin_array,
    pascal_array,
    uh_insertion_array,
)
from latticepaths.series import Series, polynomial

__all__ = [
    "Family",
    "FAMILIES",
    "METHODS",
    "UnknownFamilyError",
    "ConsistencyError",
    "get_family",
    "binom",
    "central_binomial",
    "catalan",
    "formula_term",
    "gf",
    "terms",
    "central_gf",
    "catalan_gf",
    "family_array",
]

METHODS = ("formula", "gf", "riordan", "brute")


class UnknownFamilyError(ValueError):
    """Lookup by a key or OEIS id that names no known family."""


class ConsistencyError(RuntimeError):
    """Two routes that must agree produced different numbers."""


def binom(n: int, k: int) -> int:
    """Binomial coefficient, 0 whenever k is outside 0..n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def central_binomial(n: int) -> int:
    """C(2n, n): central paths of length 2n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n, n)


def catalan(n: int) -> int:
    """C(2n, n) / (n + 1): sub-axis central paths of length 2n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return comb(2 * n, n) // (n + 1)


# Triangle entry for each named array, as a plain binomial expression.
_WEIGHTS = {
    "identity": lambda n, d: 1 if n == d else 0,
    "delannoy": lambda n, d: binom(n + d, n - d),
    "motzkin": lambda n, d: binom(n, 2 * d),
    "uh": lambda n, d: binom(n - d, d),
    "pascal": lambda n, d: binom(n, d),
}

_ARRAYS = {
    "identity": identity_array,
    "delannoy": delannoy_array,
    "motzkin": motzkin_array,
    "uh": uh_insertion_array,
    "pascal": pascal_array,
}


@dataclass(frozen=True)
class Family:
    """One named family of lattice paths.

    ``constrained`` families stay on or below the x-axis and weight the
    Catalan numbers (the per-column base acquires a 1/(d+1)); the
    unconstrained ones weight the central binomials.  ``radicand`` is the
    polynomial under the square root of the closed-form generating
    function.
    """

    key: str
    oeis_id: str
    description: str
    array: str
    constrained: bool
    steps: frozenset[Step]
    span_factor: int
    forbid_up_then_flat: bool
    radicand: tuple[int, ...]
    offset: int = 0

    def path_family(self, n: int) -> PathFamily:
        """The concrete enumeration problem for index ``n``."""
        if n < 0:
            raise ValueError("n must be >= 0")
        return PathFamily(
            steps=self.steps,
            span=self.span_factor * n,
            nonpositive=self.constrained,
            forbid_up_then_flat=self.forbid_up_then_flat,
        )

    def base_term(self, d: int) -> int:
        return catalan(d) if self.constrained else central_binomial(d)

    def weight(self, n: int, d: int) -> int:
        """Triangle entry multiplying the d-th base term in the sum for n."""
        return _WEIGHTS[self.array](n, d)


_UD = frozenset({Step.U, Step.D})
_UDH = frozenset({Step.U, Step.D, Step.H})
_UDF = frozenset({Step.U, Step.D, Step.F})


def _family(key, oeis_id, description, array, constrained, steps, span_factor,
            forbid, radicand) -> Family:
    return Family(
        key=key,
        oeis_id=oeis_id,
        description=description,
        array=array,
        constrained=constrained,
        steps=steps,
        span_factor=span_factor,
        forbid_up_then_flat=forbid,
        radicand=radicand,
    )


FAMILIES: dict[str, Family] = {
    f.key: f
    for f in (
        _family(
            "central", "A000984",
            "central lattice paths: U/D steps to (2n, 0)",
            "identity", False, _UD, 2, False, (1, -4),
        ),
        _family(
            "dyck", "A000108",
            "Dyck paths: central lattice paths never above the x-axis",
            "identity", True, _UD, 2, False, (1, -4),
        ),
        _family(
            "delannoy", "A001850",
            "central Delannoy paths: U/D plus double-width flat steps H",
            "delannoy", False, _UDH, 2, False, (1, -6, 1),
        ),
        _family(
            "schroeder", "A006318",
            "Schroeder paths: central Delannoy paths never above the x-axis",
            "delannoy", True, _UDH, 2, False, (1, -6, 1),
        ),
        _family(
            "big_motzkin", "A002426",
            "big Motzkin paths: U/D plus unit flat steps F (central trinomial coefficients)",
            "motzkin", False, _UDF, 1, False, (1, -2, -3),
        ),
        _family(
            "motzkin", "A001006",
            "Motzkin paths: big Motzkin paths never above the x-axis",
            "motzkin", True, _UDF, 1, False, (1, -2, -3),
        ),
        _family(
            "avoid_flat_big_motzkin", "A026569",
            "big Motzkin paths with no flat step directly after an up step",
            "uh", False, _UDF, 1, True, (1, -2, -3, 4),
        ),
        _family(
            "avoid_flat_motzkin", "A090344",
            "Motzkin paths with no flat step directly after an up step",
            "uh", True, _UDF, 1, True, (1, -2, -3, 4),
        ),
        _family(
            "avoid_flat_delannoy", "A026375",
            "central Delannoy paths with no H step directly after an up step",
            "pascal", False, _UDH, 2, True, (1, -6, 5),
        ),
        _family(
            "avoid_flat_schroeder", "A007317",
            "Schroeder paths with no H step directly after an up step",
            "pascal", True, _UDH, 2, True, (1, -6, 5),
        ),
    )
}

_BY_OEIS = {f.oeis_id: f for f in FAMILIES.values()}


def get_family(name: str) -> Family:
    """Look up a family by key or OEIS id (interchangeably)."""
    if name in FAMILIES:
        return FAMILIES[name]
    candidate = name.upper()
    if candidate in _BY_OEIS:
        return _BY_OEIS[candidate]
    raise UnknownFamilyError(
        f"unknown family {name!r}; expected one of {', '.join(FAMILIES)} or an OEIS id"
    )


def formula_term(family: Family, n: int) -> int:
    """The binomial sum for term ``n``: sum_d weight(n, d) * base(d)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(family.weight(n, d) * family.base_term(d) for d in range(n + 1))


def central_gf(order: int) -> Series:
    """Generating function of the central binomials: 1/sqrt(1-4x)."""
    return 1 / polynomial([1, -4], order).sqrt()


def catalan_gf(order: int) -> Series:
    """Generating function of the Catalan numbers: 2/(1+sqrt(1-4x))."""
    return 2 / (1 + polynomial([1, -4], order).sqrt())


def family_array(family: Family, order: int) -> RiordanArray:
    """The family's named Riordan array at the given order."""
    return _ARRAYS[family.array](order)


def _composed_gf(family: Family, order: int) -> Series:
    """The raw transform route: f(x) * base_gf(x*g(x)), nothing simplified."""
    base = catalan_gf(order) if family.constrained else central_gf(order)
    return family_array(family, order).transform(base)


def _closed_gf(family: Family, order: int) -> Series:
    """The simplified radical route."""
    root = polynomial(family.radicand, order).sqrt()
    if not family.constrained:
        return 1 / root
    front = (1,) if family.array == "identity" else (1, -1)
    return 2 / (polynomial(front, order) + root)


def gf(family: Family, order: int) -> Series:
    """The family's generating function, truncated at ``order``.

    Builds both the simplified radical form and the raw composed form and
    demands they agree coefficient by coefficient; any disagreement (or a
    non-integer coefficient) is an implementation bug and raises
    :class:`ConsistencyError`.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    closed = _closed_gf(family, order)
    composed = _composed_gf(family, order)
    if closed != composed:
        n = next(i for i in range(order) if closed.coeff(i) != composed.coeff(i))
        raise ConsistencyError(
            f"{family.key}: simplified gf gives {closed.coeff(n)} at x**{n} "
            f"but the composed form gives {composed.coeff(n)}"
        )
    for i in range(order):
        if closed.coeff(i).denominator != 1:
            raise ConsistencyError(
                f"{family.key}: gf coefficient at x**{i} is not an integer: {closed.coeff(i)}"
            )
    return closed


def _as_ints(family: Family, values: list[Fraction]) -> list[int]:
    out = []
    for i, v in enumerate(values):
        if v.denominator != 1:
            raise ConsistencyError(f"{family.key}: term {i} is not an integer: {v}")
        out.append(int(v))
    return out


def terms(family: Family, k: int, method: str = "formula") -> list[int]:
    """The first ``k`` terms of the family's sequence by the chosen method."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if method == "formula":
        return [formula_term(family, n) for n in range(k)]
    if method == "gf":
        series = gf(family, k)
        return _as_ints(family, [series.coeff(n) for n in range(k)])
    if method == "riordan":
        array = family_array(family, k)
        base = [family.base_term(d) for d in range(k)]
        return _as_ints(family, array.row_apply(base))
    if method == "brute":
        # Fail up front: the guard on the last index covers all earlier ones.
        family.path_family(k - 1)._check_enumerable()
        return [len(enumerate_paths(family.path_family(n))) for n in range(k)]
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")
