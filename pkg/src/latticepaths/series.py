"""Truncated formal power series with exact rational coefficients.

This is the arithmetic engine behind every generating function in the
package: termwise sums, Cauchy products, long division, square roots by
coefficient recurrence, and composition.  Coefficients are
:class:`fractions.Fraction` throughout; nothing is ever rounded.

A series of order ``N`` knows its coefficients up to ``x**(N-1)`` and no
further.  Binary operations truncate to the smaller operand's order, so a
result never claims more precision than its inputs had.  Reading a
coefficient past the order raises :class:`PrecisionError` instead of
silently returning zero.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Union

Coefficient = Union[int, Fraction]

__all__ = [
    "Series",
    "SeriesError",
    "PrecisionError",
    "NonInvertibleError",
    "RadicandError",
    "CompositionError",
    "constant",
    "polynomial",
    "geometric",
    "binomial_series",
    "shift",
]


class SeriesError(Exception):
    """Base class for series arithmetic failures."""


class PrecisionError(SeriesError):
    """A coefficient beyond the truncation order was requested."""


class NonInvertibleError(SeriesError):
    """Division by a series whose constant term is zero."""


class RadicandError(SeriesError):
    """Square root of a series whose constant term is not 1."""


class CompositionError(SeriesError):
    """Composition with an inner series whose constant term is not 0."""


def _to_fraction(value: Coefficient) -> Fraction:
    # Floats are rejected: Fraction(0.1) is the exact binary float, which is
    # never what an exact computation wants.
    if isinstance(value, float):
        raise TypeError("float coefficients are not exact; use int or Fraction")
    return Fraction(value)


class Series:
    """A formal power series truncated at a fixed order.

    ``Series([1, -1])`` is ``1 - x`` known through ``x**1``.  The order is
    the number of known coefficients and is immutable, as are the
    coefficients themselves.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient]):
        frozen = tuple(_to_fraction(c) for c in coeffs)
        if not frozen:
            raise ValueError("a series needs at least one coefficient")
        self._coeffs = frozen

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, n: int) -> Fraction:
        """Coefficient of ``x**n``; raises past the truncation order."""
        if n < 0:
            raise ValueError(f"coefficient index must be >= 0, got {n}")
        if n >= len(self._coeffs):
            raise PrecisionError(
                f"coefficient of x**{n} requested from a series of order {len(self._coeffs)}"
            )
        return self._coeffs[n]

    def truncate(self, order: int) -> "Series":
        """Drop precision down to ``order`` coefficients."""
        if not 1 <= order <= len(self._coeffs):
            raise ValueError(f"cannot truncate order-{len(self._coeffs)} series to {order}")
        if order == len(self._coeffs):
            return self
        return Series(self._coeffs[:order])

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    # -- algebra ---------------------------------------------------------

    def __add__(self, other) -> "Series":
        other = _coerce(other, self.order)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        return Series(a[i] + b[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "Series":
        other = _coerce(other, self.order)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        return Series(a[i] - b[i] for i in range(n))

    def __rsub__(self, other) -> "Series":
        other = _coerce(other, self.order)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> "Series":
        return Series(-c for c in self._coeffs)

    def __mul__(self, other) -> "Series":
        other = _coerce(other, self.order)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        out = []
        for k in range(n):
            acc = Fraction(0)
            for i in range(k + 1):
                acc += a[i] * b[k - i]
            out.append(acc)
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Series":
        other = _coerce(other, self.order)
        if other is None:
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        if b[0] == 0:
            raise NonInvertibleError("division by a series with zero constant term")
        q: list[Fraction] = [a[0] / b[0]]
        for k in range(1, n):
            acc = a[k]
            for i in range(k):
                acc -= q[i] * b[k - i]
            q.append(acc / b[0])
        return Series(q)

    def __rtruediv__(self, other) -> "Series":
        other = _coerce(other, self.order)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int) -> "Series":
        """Repeated product; ``s**0`` is the constant series 1."""
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series exponent must be a non-negative integer")
        result = constant(1, self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def sqrt(self) -> "Series":
        """Square root of a series with constant term 1.

        Uses the recurrence r0 = 1, r_n = (s_n - sum_{i=1..n-1} r_i r_{n-i}) / 2,
        which keeps every coefficient rational.
        """
        s = self._coeffs
        if s[0] != 1:
            raise RadicandError("sqrt requires constant term 1")
        r: list[Fraction] = [Fraction(1)]
        for n in range(1, len(s)):
            acc = s[n]
            for i in range(1, n):
                acc -= r[i] * r[n - i]
            r.append(acc / 2)
        return Series(r)

    def compose(self, inner: "Series") -> "Series":
        """Substitute ``inner`` (constant term 0) into this series.

        Horner accumulation from the top coefficient down; exact up to the
        shared order because ``inner`` has valuation >= 1.
        """
        if not isinstance(inner, Series):
            raise TypeError("compose expects a Series argument")
        if inner.coeff(0) != 0:
            raise CompositionError("inner series must have constant term 0")
        n = min(self.order, inner.order)
        outer = self._coeffs
        inner = inner.truncate(n)
        acc = constant(outer[n - 1], n)
        for d in range(n - 2, -1, -1):
            acc = acc * inner + constant(outer[d], n)
        return acc

    __call__ = compose

    # -- housekeeping ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        if len(self._coeffs) > 8:
            shown += ", ..."
        return f"Series(order={len(self._coeffs)}, coeffs=[{shown}])"

    def to_dict(self) -> dict:
        """JSON-friendly form: ``{"order": N, "coeffs": ["p/q", ...]}``."""
        return {"order": self.order, "coeffs": [str(c) for c in self._coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> "Series":
        coeffs = [Fraction(c) for c in data["coeffs"]]
        if data.get("order") != len(coeffs):
            raise ValueError("series dict order does not match coefficient count")
        return cls(coeffs)


def _coerce(value, order: int):
    """Promote ints/Fractions to a constant series of the given order."""
    if isinstance(value, Series):
        return value
    if isinstance(value, (int, Fraction)):
        return constant(value, order)
    return None


def constant(value: Coefficient, order: int) -> Series:
    """The constant ``value`` as a series of the given order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return Series([_to_fraction(value)] + [Fraction(0)] * (order - 1))


def polynomial(coeffs: Iterable[Coefficient], order: int) -> Series:
    """A polynomial padded (its higher coefficients are exactly zero) or
    truncated to the requested order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    frozen = [_to_fraction(c) for c in coeffs]
    if len(frozen) < order:
        frozen += [Fraction(0)] * (order - len(frozen))
    return Series(frozen[:order])


def geometric(order: int) -> Series:
    """``1/(1-x)``: all coefficients 1."""
    return binomial_series(1, order)


def binomial_series(k: int, order: int) -> Series:
    """``(1-x)**(-k)`` for ``k >= 1``: coefficient of ``x**m`` is C(k+m-1, m)."""
    if k < 1:
        raise ValueError("binomial_series needs k >= 1; use constant(1, order) for k = 0")
    if order < 1:
        raise ValueError("order must be >= 1")
    return Series(Fraction(comb(k + m - 1, m)) for m in range(order))


def shift(s: Series, k: int = 1) -> Series:
    """Multiply by ``x**k`` at unchanged order (the top ``k`` coefficients
    fall off the end of the window)."""
    if k < 0:
        raise ValueError("shift amount must be >= 0")
    if k == 0:
        return s
    n = s.order
    if k >= n:
        return Series([Fraction(0)] * n)
    return Series((Fraction(0),) * k + s.coeffs[: n - k])
