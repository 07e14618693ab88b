"""Truncated formal power series over an exact field.

Coefficients are stored in ordinary t^n normalization (NOT divided by n!);
conversion to exponential-generating-function coefficients happens only in
:func:`nth_taylor_coefficient`.  Coefficient types mix freely as long as
they support field arithmetic: Fraction and CyclotomicNumber both do.

>>> geometric = TruncatedSeries.of([1, -1], order=5).inverse()
>>> geometric.coeffs == (1, 1, 1, 1, 1)
True
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonUnitConstantTerm, OrderTooLow


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple

    @staticmethod
    def of(coeffs, order: int | None = None) -> "TruncatedSeries":
        """Build from a coefficient list, zero-padded or cut to `order`."""
        vals = [Fraction(c) if isinstance(c, int) else c for c in coeffs]
        if order is not None:
            if order < 1:
                raise ValueError("series order must be >= 1")
            filler = _zero_like(vals[0]) if vals else Fraction(0)
            vals = (vals + [filler] * order)[:order]
        if not vals:
            raise ValueError("a truncated series needs at least one coefficient")
        return TruncatedSeries(tuple(vals))

    @staticmethod
    def constant(value, order: int) -> "TruncatedSeries":
        zero = _zero_like(value)
        return TruncatedSeries.of([value] + [zero] * (order - 1))

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return TruncatedSeries(self.coeffs[:order])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(n)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        zero = _zero_like(self.coeffs[0] + other.coeffs[0])
        out = [zero] * n
        for i, a in enumerate(self.coeffs[:n]):
            if _is_zero(a):
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not _is_zero(b):
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(tuple(out))

    def scale(self, factor) -> "TruncatedSeries":
        return TruncatedSeries(tuple(factor * c for c in self.coeffs))

    def inverse(self) -> "TruncatedSeries":
        """Reciprocal series: b with self * b = 1 + O(t^order)."""
        a0 = self.coeffs[0]
        if _is_zero(a0):
            raise NonUnitConstantTerm("series inverse needs a nonzero constant term")
        inv0 = a0 ** (-1)
        out = [inv0]
        for n in range(1, self.order):
            acc = None
            for j in range(1, n + 1):
                term = self.coeffs[j] * out[n - j]
                acc = term if acc is None else acc + term
            out.append(-inv0 * acc)
        return TruncatedSeries(tuple(out))

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def to_json(self) -> dict:
        from .rationals import format_rational

        encoded = [
            c.to_json() if hasattr(c, "to_json") else format_rational(c) for c in self.coeffs
        ]
        return {"order": self.order, "coeffs": encoded}


def exp_linear(c, order: int) -> TruncatedSeries:
    """The series of exp(c*t): coefficients c^n / n!, exactly."""
    if isinstance(c, int):
        c = Fraction(c)
    term = c**0
    out = [term]
    for n in range(1, order):
        term = term * c / n
        out.append(term)
    return TruncatedSeries(tuple(out))


def nth_taylor_coefficient(series: TruncatedSeries, n: int):
    """n! times the ordinary coefficient: the coefficient of t^n/n!."""
    if n >= series.order:
        raise OrderTooLow(f"need order > {n}, series has order {series.order}")
    return math.factorial(n) * series.coeffs[n]


def _zero_like(x):
    return x * 0


def _is_zero(x) -> bool:
    return x == 0 or (hasattr(x, "is_zero") and x.is_zero())
