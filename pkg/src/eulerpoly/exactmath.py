"""Exact rational scalars, Pochhammer symbols and truncated power series.

Every number in the package is a :class:`fractions.Fraction`; nothing is ever
rounded.  Gamma ratios are always written as finite Pochhammer products.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class DivergentSeriesError(ValueError):
    """A hypergeometric sum was asked for without a terminating top parameter."""


class PoleError(ZeroDivisionError):
    """A denominator Pochhammer factor vanishes before the sum terminates."""


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are refused: they would smuggle rounding into the system.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def parse_rational(text: str) -> Fraction:
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"malformed rational {text!r}; expected 'p/q' or an integer")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(value: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_nonpositive_integer(value: Fraction) -> bool:
    return value.denominator == 1 and value <= 0


def pochhammer(a, n: int) -> Fraction:
    """Rising factorial ``a (a+1) ... (a+n-1)``; equals 1 for ``n == 0``.

    Always a direct product, so negative ``a`` needs no sign bookkeeping.
    """
    if n < 0:
        raise ValueError("pochhammer index must be non-negative")
    a = to_rational(a)
    result = Fraction(1)
    for i in range(n):
        result *= a + i
    return result


def vector_pochhammer(f: Sequence, m: Sequence[int]) -> Fraction:
    """``prod_j (f_j)_{m_j}``."""
    if len(f) != len(m):
        raise ValueError(f"length mismatch: {len(f)} parameters vs {len(m)} indices")
    result = Fraction(1)
    for fj, mj in zip(f, m):
        result *= pochhammer(fj, mj)
    return result


def binomial(n, k: int) -> Fraction:
    """Generalized binomial coefficient ``n choose k`` for rational ``n``."""
    if k < 0:
        return Fraction(0)
    n = to_rational(n)
    if n.denominator == 1 and 0 <= n < k:
        return Fraction(0)
    return (-1) ** k * pochhammer(-n, k) / factorial(k)


def _cancel_parameters(top: list[Fraction], bottom: list[Fraction]):
    top = list(top)
    kept_bottom = []
    for b in bottom:
        if b in top:
            top.remove(b)
        else:
            kept_bottom.append(b)
    return top, kept_bottom


def terminating_hypergeometric(top: Iterable, bottom: Iterable) -> Fraction:
    """Exact value of a terminating ``pFq`` at unit argument.

    The sum runs to ``k`` where ``-k`` is the terminating top parameter
    closest to zero.  Identical top/bottom pairs are then cancelled, which is
    exact for every term up to ``k``.
    """
    top = [to_rational(t) for t in top]
    bottom = [to_rational(b) for b in bottom]
    stops = [-t for t in top if is_nonpositive_integer(t)]
    top, bottom = _cancel_parameters(top, bottom)
    if not stops:
        raise DivergentSeriesError(f"no terminating top parameter in {top}")
    k = int(min(stops))
    for b in bottom:
        if b.denominator == 1 and -k + 1 <= b <= 0:
            raise PoleError(f"bottom parameter {b} vanishes before termination at {k}")
    total = Fraction(0)
    term = Fraction(1)
    for j in range(k + 1):
        total += term
        if j == k:
            break
        num = Fraction(1)
        for t in top:
            num *= t + j
        den = Fraction(j + 1)
        for b in bottom:
            den *= b + j
        term = term * num / den
    return total


def determinant(matrix: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    rows = [[to_rational(x) for x in row] for row in matrix]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise ValueError("determinant needs a square matrix")
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        p = rows[col][col]
        det *= p
        for r in range(col + 1, n):
            factor = rows[r][col] / p
            if factor:
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return det


@dataclass(frozen=True)
class FormalSeries:
    """Power series known through ``x**order``.

    Binary operations keep the smaller of the two orders.
    """

    coeffs: tuple
    order: int

    def __post_init__(self):
        coeffs = tuple(to_rational(c) for c in self.coeffs)
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(coeffs) > self.order + 1:
            coeffs = coeffs[: self.order + 1]
        coeffs = coeffs + (Fraction(0),) * (self.order + 1 - len(coeffs))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_function(cls, fn, order: int) -> "FormalSeries":
        return cls(tuple(fn(n) for n in range(order + 1)), order)

    def __getitem__(self, n: int) -> Fraction:
        if n > self.order:
            raise IndexError(f"coefficient {n} lies beyond truncation order {self.order}")
        return self.coeffs[n]

    def truncate(self, order: int) -> "FormalSeries":
        return FormalSeries(self.coeffs, min(order, self.order))

    def __add__(self, other: "FormalSeries") -> "FormalSeries":
        order = min(self.order, other.order)
        return FormalSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(order + 1)), order)

    def __neg__(self) -> "FormalSeries":
        return FormalSeries(tuple(-c for c in self.coeffs), self.order)

    def __sub__(self, other: "FormalSeries") -> "FormalSeries":
        return self + (-other)

    def scale(self, c) -> "FormalSeries":
        c = to_rational(c)
        return FormalSeries(tuple(c * x for x in self.coeffs), self.order)

    def __mul__(self, other):
        if not isinstance(other, FormalSeries):
            return self.scale(other)
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(order + 1):
            s = Fraction(0)
            for i in range(n + 1):
                if a[i] and b[n - i]:
                    s += a[i] * b[n - i]
            out.append(s)
        return FormalSeries(tuple(out), order)

    __rmul__ = scale

    def compose(self, inner: "FormalSeries") -> "FormalSeries":
        """``self(inner(x))``; requires ``inner`` to have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("inner series must vanish at 0")
        order = min(self.order, inner.order)
        result = FormalSeries((self.coeffs[0],), order)
        power = FormalSeries((1,), order)
        for n in range(1, order + 1):
            power = power * inner
            if self.coeffs[n]:
                result = result + power.scale(self.coeffs[n])
        return result


def binomial_series(s, order: int) -> FormalSeries:
    """Coefficients of ``(1-x)**(-s)``: ``(s)_n / n!`` through ``x**order``."""
    s = to_rational(s)
    coeffs = []
    c = Fraction(1)
    for n in range(order + 1):
        coeffs.append(c)
        c = c * (s + n) / (n + 1)
    return FormalSeries(tuple(coeffs), order)


def euler_variable_series(order: int) -> FormalSeries:
    """``x / (x - 1) = -x - x**2 - ...`` truncated at ``order``."""
    return FormalSeries((0,) + (-1,) * order, order)
