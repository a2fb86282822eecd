"""Generalized f-Eulerian polynomials.

For a rational ``a`` and a polynomial ``F`` with ``F(0) = 1`` the numerator
``hatw`` is defined by::

    sum_n F(n) (a)_n / n! x**n  =  hatw(x) / (1 - x)**(deg F + a)

``F`` is normally given in block form, a product of rising factorials
``(f_j + t)_{m_j} / (f_j)_{m_j}``.  Several independent constructions are
provided so they can be cross-checked, together with verdicts for the
sufficient conditions on zero location.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial, lcm
from typing import Iterator, Sequence

from .exactmath import (
    FormalSeries,
    PoleError,
    binomial_series,
    is_nonpositive_integer,
    pochhammer,
    terminating_hypergeometric,
    to_rational,
)
from .polyalgebra import Poly, ZoneCounts, sturm_zone_counts


@dataclass(frozen=True)
class EulerianSpec:
    """The pair ``(a, F)`` with ``F`` stored as blocks ``(f_j, m_j)``."""

    a: Fraction
    blocks: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "a", to_rational(self.a))
        blocks = []
        for f, m in self.blocks:
            f = to_rational(f)
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise ValueError(f"block length must be a positive integer, got {m!r}")
            if is_nonpositive_integer(f) and f >= 1 - m:
                raise ValueError(f"block ({f}, {m}) has vanishing normalization")
            blocks.append((f, m))
        object.__setattr__(self, "blocks", tuple(blocks))

    @property
    def r(self) -> int:
        return len(self.blocks)

    @property
    def m(self) -> int:
        return sum(mj for _, mj in self.blocks)

    @property
    def f(self) -> tuple:
        return tuple(fj for fj, _ in self.blocks)

    @property
    def m_vec(self) -> tuple:
        return tuple(mj for _, mj in self.blocks)

    @property
    def alphas(self) -> tuple:
        """Negated roots of ``F`` in ascending order."""
        return tuple(sorted(fj + i for fj, mj in self.blocks for i in range(mj)))

    @property
    def normalization(self) -> Fraction:
        """``prod_j (f_j)_{m_j}``, the value of the unnormalized product at 0."""
        out = Fraction(1)
        for fj, mj in self.blocks:
            out *= pochhammer(fj, mj)
        return out

    def with_a(self, a) -> "EulerianSpec":
        return EulerianSpec(a, self.blocks)

    def to_json(self) -> dict:
        from .exactmath import format_rational

        return {
            "a": format_rational(self.a),
            "blocks": [[format_rational(fj), mj] for fj, mj in self.blocks],
        }


def f_polynomial_eval(spec: EulerianSpec, t) -> Fraction:
    t = to_rational(t)
    out = Fraction(1)
    for fj, mj in spec.blocks:
        out *= pochhammer(fj + t, mj) / pochhammer(fj, mj)
    return out


def f_polynomial(spec: EulerianSpec) -> Poly:
    out = Poly.constant(1)
    for fj, mj in spec.blocks:
        out = out * Poly.rising(fj, mj)
    return out / spec.normalization


def hatw_direct(spec: EulerianSpec, normalize: bool = True) -> Poly:
    """Closed-form coefficients of ``hatw``.

    The coefficient of ``x**k`` is the Cauchy product
    ``sum_j F(j) (a)_j / j! * (-m-a)_{k-j} / (k-j)!`` which has no
    denominators besides factorials, so it is defined for every valid spec.
    """
    a, m = spec.a, spec.m
    gen = [f_polynomial_eval(spec, j) * pochhammer(a, j) / factorial(j) for j in range(m + 1)]
    tail = [pochhammer(-m - a, i) / factorial(i) for i in range(m + 1)]
    coeffs = [sum(gen[j] * tail[k - j] for j in range(k + 1)) for k in range(m + 1)]
    out = Poly(coeffs)
    return out if normalize else out * spec.normalization


def hatw_hypergeometric(spec: EulerianSpec) -> Poly:
    """Coefficients as terminating hypergeometric sums.

    Raises :class:`PoleError` when ``1 + m - k + a`` hits a non-positive
    integer inside the summation range, or when some ``(f_j)_i`` vanishes
    there and the block ratio becomes 0/0.
    """
    a, m = spec.a, spec.m
    top_tail = [fj + mj for fj, mj in spec.blocks]
    coeffs = []
    for k in range(m + 1):
        if any(is_nonpositive_integer(fj) and -fj < k for fj in spec.f):
            raise PoleError(f"block ratio is indeterminate for k = {k}")
        s = terminating_hypergeometric([-k, a, *top_tail], [1 + m - k + a, *spec.f])
        coeffs.append(pochhammer(-m - a, k) / factorial(k) * s)
    return Poly(coeffs)


@dataclass(frozen=True)
class RecursionStep:
    """One application of ``P -> x(1-x)P' + (x(s-alpha)+alpha)P``."""

    alpha: Fraction
    s: Fraction
    before: Poly
    after: Poly


def _apply_step(p: Poly, s: Fraction, alpha: Fraction) -> Poly:
    x = Poly.x()
    return x * (1 - x) * p.derivative() + (x * (s - alpha) + alpha) * p


def recursion_steps(spec: EulerianSpec) -> Iterator[RecursionStep]:
    """Yield the unnormalized numerators after each root is absorbed, ascending."""
    p = Poly.constant(1)
    s = spec.a
    for alpha in spec.alphas:
        nxt = _apply_step(p, s, alpha)
        yield RecursionStep(alpha, s, p, nxt)
        p = nxt
        s += 1


def hatw_recursive(spec: EulerianSpec, normalize: bool = True) -> Poly:
    p = Poly.constant(1)
    for step in recursion_steps(spec):
        p = step.after
    return p / spec.normalization if normalize else p


def generating_series(a, F: Poly, order: int) -> FormalSeries:
    """``sum_n F(n) (a)_n / n! x**n`` through ``x**order``."""
    a = to_rational(a)
    return FormalSeries.from_function(lambda n: F(n) * pochhammer(a, n) / factorial(n), order)


def hatw_from_poly(a, F: Poly, degree: int | None = None) -> Poly:
    """``hatw`` for an arbitrary polynomial ``F`` via truncated series.

    ``degree`` sets the exponent ``degree + a`` of ``1 - x``; it defaults to
    ``deg F``.  Two extra coefficients are computed and required to vanish.
    """
    a = to_rational(a)
    n = F.degree if degree is None else degree
    if n < 0:
        n = 0
    order = n + 2
    series = generating_series(a, F, order) * binomial_series(-(n + a), order)
    if any(series[k] for k in range(n + 1, order + 1)):
        raise ArithmeticError("numerator does not terminate at the requested degree")
    return Poly(series.coeffs[: n + 1])


def series_check(spec: EulerianSpec, order: int) -> bool:
    if order < spec.m:
        raise ValueError("order must be at least the degree of F")
    lhs = generating_series(spec.a, f_polynomial(spec), order) * binomial_series(-(spec.m + spec.a), order)
    target = hatw_direct(spec)
    return all(lhs[k] == target.coeff(k) for k in range(order + 1))


def w_polynomial(spec: EulerianSpec) -> Poly:
    """``w(y) = sum_k (a)_k/k! * sum_j (-k)_j/j! F(j) * y**k``."""
    values = [f_polynomial_eval(spec, j) for j in range(spec.m + 1)]
    coeffs = []
    for k in range(spec.m + 1):
        inner = sum(pochhammer(-k, j) / factorial(j) * values[j] for j in range(k + 1))
        coeffs.append(pochhammer(spec.a, k) / factorial(k) * inner)
    return Poly(coeffs)


def euler_substitute(p: Poly, weight: int) -> Poly:
    """``(1-y)**weight * p(y/(y-1))`` as a polynomial in ``y``."""
    if p.degree > weight:
        raise ValueError("weight below the polynomial degree")
    y = Poly.x()
    out = Poly()
    for k, c in enumerate(p.coeffs):
        if c:
            out = out + (-y) ** k * Poly((1, -1)) ** (weight - k) * c
    return out


# zero-location verdicts


def _lattice_condition(a: Fraction, alphas: Sequence[Fraction]) -> bool:
    """Nonnegative sorted ``alphas`` containing every ``a + i`` below the largest one."""
    if not alphas:
        return True
    if alphas[0] < 0:
        return False
    top = alphas[-1]
    point = a
    present = set(alphas)
    while point < top:
        if point not in present:
            return False
        point += 1
    return True


@dataclass(frozen=True)
class Verdict:
    hypothesis: bool
    confirmed: bool | None = None

    def to_json(self) -> dict:
        return {"hypothesis": self.hypothesis, "confirmed": self.confirmed}


@dataclass(frozen=True)
class ZeroClassification:
    counts: ZoneCounts
    degree: int
    verdicts: dict = field(default_factory=dict)

    @property
    def violated(self) -> list[str]:
        return [name for name, v in self.verdicts.items() if v.hypothesis and not v.confirmed]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "zones": self.counts.to_json(),
            "verdicts": {k: v.to_json() for k, v in self.verdicts.items()},
        }


def negative_all_hypothesis(spec: EulerianSpec) -> bool:
    return spec.a > 0 and _lattice_condition(spec.a, spec.alphas)


def negative_but_one_hypothesis(spec: EulerianSpec) -> bool:
    """Lattice condition on all roots but one; the excluded root may be anything."""
    if spec.a <= 0 or spec.m == 0:
        return False
    alphas = list(spec.alphas)
    for i in range(len(alphas)):
        rest = alphas[:i] + alphas[i + 1 :]
        if _lattice_condition(spec.a, rest):
            return True
    return False


def unit_interval_hypothesis(spec: EulerianSpec) -> bool:
    return spec.m >= 1 and spec.a + spec.m < 1 and all(al > 0 for al in spec.alphas)


def unit_interval_but_one_hypothesis(spec: EulerianSpec) -> bool:
    al = spec.alphas
    return (
        spec.m >= 1
        and 1 <= spec.a + spec.m < 2
        and all(x > 0 for x in al)
        and spec.a < al[-1]
    )


def beyond_one_hypothesis(spec: EulerianSpec) -> bool:
    return spec.m >= 2 and all(x < spec.a for x in spec.alphas) and spec.a < 1 - spec.m


def beyond_one_but_one_hypothesis(spec: EulerianSpec) -> bool:
    al = spec.alphas
    return (
        spec.m >= 1
        and 1 - spec.m < spec.a < 2 - spec.m
        and all(x < spec.a for x in al)
        and all(x < 0 for x in al)
    )


def large_a_hypothesis(spec: EulerianSpec) -> bool:
    return spec.a > 0 and all(0 < fj and fj + mj < spec.a for fj, mj in spec.blocks)


def classify_zeros(spec: EulerianSpec) -> ZeroClassification:
    p = hatw_direct(spec)
    z = sturm_zone_counts(p)
    deg = p.degree
    positives = z.at_zero + z.in_01 + z.at_one + z.gt_one
    verdicts = {}

    def record(name, hyp, conclusion):
        verdicts[name] = Verdict(hyp, conclusion() if hyp else None)

    record("negative_all", negative_all_hypothesis(spec), lambda: z.neg == deg and z.nonreal == 0)
    record("negative_but_one", negative_but_one_hypothesis(spec), lambda: z.nonreal == 0 and positives <= 1)
    record("unit_interval", unit_interval_hypothesis(spec), lambda: z.in_01 == deg)

    def escape_one():
        ok = z.in_01 == deg - 1 and z.at_one + z.gt_one == 1
        if spec.a + spec.m == 1:
            ok = ok and z.at_one == 1
        return ok

    record("unit_interval_but_one", unit_interval_but_one_hypothesis(spec), escape_one)
    record("beyond_one", beyond_one_hypothesis(spec), lambda: z.gt_one == deg)
    record(
        "beyond_one_but_one",
        beyond_one_but_one_hypothesis(spec),
        lambda: z.gt_one == deg - 1 and z.in_01 == 1,
    )
    record("large_a", large_a_hypothesis(spec), lambda: z.neg == deg and z.nonreal == 0)
    return ZeroClassification(z, deg, verdicts)


# quadratic case


def quadratic_numerator(a, b, c) -> Poly:
    """Numerator for ``F(k) = k**2 + b k + c``."""
    a, b, c = to_rational(a), to_rational(b), to_rational(c)
    return Poly([c, a * (b + 1) - 2 * c, a * a - a * b + c])


def quadratic_negative_root_criterion(a, b, c) -> bool:
    a, b, c = to_rational(a), to_rational(b), to_rational(c)
    if a <= 0:
        raise ValueError("the quadratic criterion needs a > 0")
    return (
        a * (b + 1) ** 2 - 4 * c * (a + 1) >= 0
        and c > 0
        and a * (b + 1) > 2 * c
        and a * a - a * b + c > 0
    )


def quadratic_sturm_verdict(a, b, c) -> bool:
    p = quadratic_numerator(a, b, c)
    if p.is_zero():
        return False
    z = sturm_zone_counts(p)
    return p.degree == 2 and z.neg == 2


def quadratic_region(a, b_values: Sequence, c_values: Sequence) -> list[dict]:
    """Criterion and Sturm verdicts over a rectangular grid of ``(b, c)``."""
    out = []
    for b in b_values:
        for c in c_values:
            out.append(
                {
                    "b": to_rational(b),
                    "c": to_rational(c),
                    "inside": quadratic_negative_root_criterion(a, b, c),
                    "sturm": quadratic_sturm_verdict(a, b, c),
                }
            )
    return out


# total positivity


@dataclass(frozen=True)
class MinorWitness:
    rows: tuple
    cols: tuple
    value: Fraction


def _int_det(m: list[list[int]]) -> int:
    """Bareiss fraction-free elimination."""
    n = len(m)
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def tp_minor_check(seq: Sequence, max_order: int = 4, window: int = 12) -> tuple[bool, MinorWitness | None]:
    """Search the minors of the Toeplitz matrix ``T[i][j] = seq[j-i]`` for a negative one.

    Orders ascend; within an order, row sets then column sets are visited in
    lexicographic order, so the reported witness is deterministic.
    """
    if not (len(seq) >= window >= max_order >= 1):
        raise ValueError("need len(seq) >= window >= max_order >= 1")
    values = [to_rational(v) for v in seq[:window]]
    scale = lcm(*(v.denominator for v in values))
    ints = [int(v * scale) for v in values]
    mat = [[ints[j - i] if j >= i else 0 for j in range(window)] for i in range(window)]
    for k in range(1, max_order + 1):
        for rows in combinations(range(window), k):
            for cols in combinations(range(window), k):
                det = _int_det([[mat[i][j] for j in cols] for i in rows])
                if det < 0:
                    return False, MinorWitness(rows, cols, Fraction(det, scale**k))
    return True, None


# product of two generating polynomials


def _as_poly(item) -> Poly:
    if isinstance(item, EulerianSpec):
        if item.a != 1:
            raise ValueError("the product check is defined for a = 1")
        return f_polynomial(item)
    if isinstance(item, Poly):
        return item
    raise TypeError("expected an EulerianSpec or a Poly")


def _negative_rooted(p: Poly) -> bool:
    z = sturm_zone_counts(p)
    return z.neg == p.degree


def wagner_product_check(f, g) -> bool:
    """Whether the numerator for ``f(n) g(n)`` has only negative zeros (``a = 1``).

    Raises ``ValueError`` when either factor's numerator fails the hypothesis.
    """
    pf, pg = _as_poly(f), _as_poly(g)
    for name, p in (("f", pf), ("g", pg)):
        if not _negative_rooted(hatw_from_poly(1, p)):
            raise ValueError(f"numerator of {name} is not real-rooted with negative zeros")
    if isinstance(f, EulerianSpec) and isinstance(g, EulerianSpec):
        product = hatw_direct(EulerianSpec(1, f.blocks + g.blocks))
    else:
        product = hatw_from_poly(1, pf * pg)
    return _negative_rooted(product)


def m_eulerian(m: int, n: int) -> Poly:
    """Iterate ``S -> x(1-x)S' + (1 + m k x)S`` starting from ``S = 1``."""
    x = Poly.x()
    s = Poly.constant(1)
    for k in range(n):
        s = x * (1 - x) * s.derivative() + (1 + x * (m * k)) * s
    return s
