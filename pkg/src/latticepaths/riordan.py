"""Riordan arrays and their sequence transform.

A Riordan array is a pair of series ``(f | g)`` presenting the
lower-triangular array whose column ``d`` has generating function
``f(x) * (x*g(x))**d``; the entry in row ``n`` is the coefficient of
``x**n`` there.  Applying the array to a sequence with generating
function ``A`` produces the sequence with generating function
``f(x) * A(x*g(x))``, and the same numbers fall out of plain row-times-
vector sums over the triangle.  Keeping those two routes separate (and
checking them against each other) is the point of this module.

Four named arrays cover the path families in :mod:`latticepaths.catalog`;
their entries reduce to single binomial coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from latticepaths.series import (
    Coefficient,
    PrecisionError,
    Series,
    binomial_series,
    constant,
    geometric,
    shift,
)

__all__ = [
    "RiordanArray",
    "InvalidArrayError",
    "identity_array",
    "pascal_array",
    "delannoy_array",
    "motzkin_array",
    "uh_insertion_array",
]


class InvalidArrayError(ValueError):
    """The (f, g) pair cannot present a triangular array."""


@dataclass(frozen=True)
class RiordanArray:
    """The array ``(f | g)``, truncated at the shared order of f and g.

    ``f`` must have a nonzero constant term so that row 0 is nonzero.
    ``g`` with constant term 0 is allowed; it produces columns of
    valuation greater than their index (interior zeros in the triangle),
    which two of the named arrays need.
    """

    f: Series
    g: Series

    def __post_init__(self):
        if self.f.order != self.g.order:
            raise ValueError(
                f"f and g must share an order, got {self.f.order} and {self.g.order}"
            )
        if self.f.coeff(0) == 0:
            raise InvalidArrayError("f must have a nonzero constant term")

    @property
    def order(self) -> int:
        return self.f.order

    def _columns(self, max_d: int) -> list[Series]:
        """Column generating functions 0..max_d, built incrementally."""
        xg = shift(self.g)
        cols = [self.f]
        for _ in range(max_d):
            cols.append(cols[-1] * xg)
        return cols

    def column_gf(self, d: int) -> Series:
        """Generating function of column ``d``: ``f * (x*g)**d``."""
        if not 0 <= d < self.order:
            raise PrecisionError(f"column {d} outside order-{self.order} array")
        return self._columns(d)[d]

    def entry(self, n: int, d: int) -> Fraction:
        """Entry in row ``n``, column ``d`` (requires ``d <= n < order``)."""
        if n >= self.order:
            raise PrecisionError(f"row {n} outside order-{self.order} array")
        if not 0 <= d <= n:
            raise ValueError(f"column index must satisfy 0 <= d <= n, got d={d}, n={n}")
        return self.column_gf(d).coeff(n)

    def row(self, n: int) -> list[Fraction]:
        """Entries of row ``n`` for columns 0..n."""
        if n >= self.order:
            raise PrecisionError(f"row {n} outside order-{self.order} array")
        cols = self._columns(n)
        return [cols[d].coeff(n) for d in range(n + 1)]

    def triangle(self, rows: int) -> list[list[Fraction]]:
        """The first ``rows`` rows, each row ``n`` holding columns 0..n."""
        if not 1 <= rows <= self.order:
            raise PrecisionError(f"cannot produce {rows} rows from an order-{self.order} array")
        cols = self._columns(rows - 1)
        return [[cols[d].coeff(n) for d in range(n + 1)] for n in range(rows)]

    def transform(self, outer: Series) -> Series:
        """The series ``f * outer(x*g)``, truncated to the array's order.

        ``outer`` must carry at least as many coefficients as the array so
        the result is exact everywhere it claims to be.
        """
        if outer.order < self.order:
            raise ValueError(
                f"outer series of order {outer.order} is too short for an order-{self.order} array"
            )
        return self.f * outer.truncate(self.order).compose(shift(self.g))

    def row_apply(self, u: Sequence[Coefficient]) -> list[Fraction]:
        """Row-by-row sums ``v_n = sum_d entry(n, d) * u[d]``.

        Computed directly from triangle entries, never through
        :meth:`transform`; agreement of the two is the module's central
        consistency check and is enforced in the test suite.
        """
        if len(u) < self.order:
            raise ValueError(f"need at least {self.order} input terms, got {len(u)}")
        cols = self._columns(self.order - 1)
        values = [Fraction(c) for c in u[: self.order]]
        return [
            sum((cols[d].coeff(n) * values[d] for d in range(n + 1)), Fraction(0))
            for n in range(self.order)
        ]


def identity_array(order: int) -> RiordanArray:
    """``(1 | 1)``: entries are 1 on the diagonal and 0 elsewhere."""
    return RiordanArray(constant(1, order), constant(1, order))


def pascal_array(order: int) -> RiordanArray:
    """``(1/(1-x) | 1/(1-x))``: entries C(n, d)."""
    return RiordanArray(geometric(order), geometric(order))


def delannoy_array(order: int) -> RiordanArray:
    """``(1/(1-x) | 1/(1-x)**2)``: entries C(n+d, n-d)."""
    return RiordanArray(geometric(order), binomial_series(2, order))


def motzkin_array(order: int) -> RiordanArray:
    """``(1/(1-x) | x/(1-x)**2)``: entries C(n, 2d)."""
    return RiordanArray(geometric(order), shift(binomial_series(2, order)))


def uh_insertion_array(order: int) -> RiordanArray:
    """``(1/(1-x) | x/(1-x))``: entries C(n-d, d).

    Counts placements of flat steps that may sit only at the start of a
    path or directly after a down step.
    """
    return RiordanArray(geometric(order), shift(geometric(order)))
