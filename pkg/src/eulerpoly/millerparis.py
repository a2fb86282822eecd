"""Miller-Paris operators and the identities built on them.

``mp_operator(P, eps, rho, omega)`` maps a polynomial of degree at most
``omega`` to the characteristic polynomial of the first transformation
with bottom parameter ``rho``.  The second operator is the composition
``T(delta) o T(eps)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .exactmath import (
    FormalSeries,
    PoleError,
    binomial_series,
    euler_variable_series,
    is_nonpositive_integer,
    pochhammer,
    terminating_hypergeometric,
    to_rational,
    vector_pochhammer,
)
from .feulerian import EulerianSpec, hatw_direct, hatw_from_poly, w_polynomial, euler_substitute
from .polyalgebra import Poly


class GuardError(ValueError):
    """A non-vanishing condition required by a transformation fails."""


def block_poly(nu: Sequence, omega_vec: Sequence[int], normalize: bool = True) -> Poly:
    """``prod_i (nu_i + t)_{omega_i}``, divided by its value at 0 when ``normalize``."""
    out = Poly.constant(1)
    for v, w in zip(nu, omega_vec):
        out = out * Poly.rising(to_rational(v), w)
    if normalize:
        out = out / vector_pochhammer([to_rational(v) for v in nu], omega_vec)
    return out


def _require_nonzero(value: Fraction, what: str) -> None:
    if value == 0:
        raise GuardError(f"{what} vanishes")


def mp_operator(p: Poly, epsilon, rho, omega: int) -> Poly:
    """First Miller-Paris operator on polynomials of degree at most ``omega``.

    ``[T p](t) = 1/(rho-eps-omega)_omega * sum_k (eps)_k (-1)^k (-t)_k
    (t+rho-eps-omega)_{omega-k} / k! * sum_{j<=k} (-k)_j/j! p(j)``
    """
    eps, rho = to_rational(epsilon), to_rational(rho)
    if p.degree > omega:
        raise ValueError("polynomial degree exceeds omega")
    shift = rho - eps - omega
    norm = pochhammer(shift, omega)
    _require_nonzero(norm, "(rho - eps - omega)_omega")
    values = [p(j) for j in range(omega + 1)]
    neg_t = Poly((0, -1))
    out = Poly()
    for k in range(omega + 1):
        inner = sum(pochhammer(-k, j) / factorial(j) * values[j] for j in range(k + 1))
        if not inner:
            continue
        coef = pochhammer(eps, k) * (-1) ** k / factorial(k) * inner
        term = Poly.constant(1)
        for i in range(k):
            term = term * (neg_t + i)
        term = term * Poly.rising(shift, omega - k)
        out = out + term * coef
    return out / norm


@dataclass(frozen=True)
class MPParams:
    delta: Fraction
    epsilon: Fraction
    rho: Fraction
    nu: tuple = ()
    omega_vec: tuple = ()

    def __post_init__(self):
        for name in ("delta", "epsilon", "rho"):
            object.__setattr__(self, name, to_rational(getattr(self, name)))
        object.__setattr__(self, "nu", tuple(to_rational(v) for v in self.nu))
        object.__setattr__(self, "omega_vec", tuple(int(w) for w in self.omega_vec))
        if len(self.nu) != len(self.omega_vec):
            raise ValueError("nu and omega_vec differ in length")
        if any(w < 1 for w in self.omega_vec):
            raise ValueError("omega_vec entries must be positive")
        if vector_pochhammer(self.nu, self.omega_vec) == 0:
            raise GuardError("(nu)_omega vanishes")
        if is_nonpositive_integer(self.rho):
            raise GuardError("rho is a non-positive integer")

    @property
    def omega(self) -> int:
        return sum(self.omega_vec)

    def block(self) -> Poly:
        return block_poly(self.nu, self.omega_vec)

    def check_first(self) -> None:
        _require_nonzero(pochhammer(self.rho - self.epsilon - self.omega, self.omega), "(rho - eps - omega)_omega")

    def check_second(self) -> None:
        w = self.omega
        self.check_first()
        _require_nonzero(pochhammer(self.rho - self.delta - w, w), "(rho - delta - omega)_omega")
        _require_nonzero(pochhammer(1 + self.delta + self.epsilon - self.rho, w), "(1 + delta + eps - rho)_omega")

    def swapped(self) -> "MPParams":
        return MPParams(self.epsilon, self.delta, self.rho, self.nu, self.omega_vec)


def first_mp_char_poly(epsilon, rho, nu: Sequence, omega_vec: Sequence[int]) -> Poly:
    """Characteristic polynomial of the first transformation from the double sum
    over shifted block values ``(nu - eps - j)_omega``.
    """
    eps, rho = to_rational(epsilon), to_rational(rho)
    nu = [to_rational(v) for v in nu]
    omega = sum(omega_vec)
    shift = rho - eps - omega
    norm = vector_pochhammer(nu, omega_vec) * pochhammer(shift, omega)
    _require_nonzero(norm, "(nu)_omega (rho - eps - omega)_omega")
    out = Poly()
    for k in range(omega + 1):
        inner = sum(
            pochhammer(-k, j) / factorial(j) * vector_pochhammer([v - eps - j for v in nu], omega_vec)
            for j in range(k + 1)
        )
        if inner:
            coef = pochhammer(eps, k) * pochhammer(1 - rho + eps, k) * (-1) ** k / factorial(k) * inner
            out = out + Poly.rising(shift, omega - k) * coef
    return out / norm


def second_mp_char_poly(params: MPParams) -> Poly:
    params.check_second()
    w = params.omega
    inner = mp_operator(params.block(), params.epsilon, params.rho, w)
    return mp_operator(inner, params.delta, params.rho, w)


def _weighted_series(top1, top2, rho, poly: Poly, order: int) -> FormalSeries:
    """``sum_n (top1)_n (top2)_n / ((rho)_n n!) poly(n) x**n``."""
    def coeff(n):
        den = pochhammer(rho, n) * factorial(n)
        if den == 0:
            raise PoleError("bottom parameter rho vanishes")
        return pochhammer(top1, n) * pochhammer(top2, n) / den * poly(n)

    return FormalSeries.from_function(coeff, order)


@dataclass(frozen=True)
class SeriesComparison:
    ok: bool
    mismatch: int | None = None
    lhs: Fraction | None = None
    rhs: Fraction | None = None


def _compare(lhs: FormalSeries, rhs: FormalSeries) -> SeriesComparison:
    for n in range(min(lhs.order, rhs.order) + 1):
        if lhs[n] != rhs[n]:
            return SeriesComparison(False, n, lhs[n], rhs[n])
    return SeriesComparison(True)


def compare_first_mp(params: MPParams, order: int | None = None) -> SeriesComparison:
    params.check_first()
    w = params.omega
    order = 2 * w + 6 if order is None else order
    d, e, rho = params.delta, params.epsilon, params.rho
    lhs = _weighted_series(d, e, rho, params.block(), order)
    q = mp_operator(params.block(), e, rho, w)
    inner = _weighted_series(d, rho - e - w, rho, q, order).compose(euler_variable_series(order))
    rhs = binomial_series(d, order) * inner
    return _compare(lhs, rhs)


def verify_first_mp(params: MPParams, order: int | None = None) -> bool:
    return compare_first_mp(params, order).ok


def compare_second_mp(params: MPParams, order: int | None = None) -> SeriesComparison:
    w = params.omega
    order = 2 * w + 6 if order is None else order
    d, e, rho = params.delta, params.epsilon, params.rho
    qhat = second_mp_char_poly(params)
    lhs = _weighted_series(d, e, rho, params.block(), order)
    rhs = binomial_series(d + e + w - rho, order) * _weighted_series(rho - d - w, rho - e - w, rho, qhat, order)
    return _compare(lhs, rhs)


def verify_second_mp(params: MPParams, order: int | None = None) -> bool:
    return compare_second_mp(params, order).ok


# expansions of hatw


def _pivot_parts(spec: EulerianSpec, pivot: int):
    if not 0 <= pivot < spec.r:
        raise IndexError("pivot outside the block list")
    f1, m1 = spec.blocks[pivot]
    rest = spec.blocks[:pivot] + spec.blocks[pivot + 1 :]
    nu = tuple(f for f, _ in rest)
    om = tuple(m for _, m in rest)
    return f1, m1, nu, om, sum(om)


def _check_bottom(f1: Fraction, upto: int) -> None:
    if pochhammer(f1, upto) == 0:
        raise GuardError(f"(f1)_k vanishes for k <= {upto}")


def monomial_char_poly(spec: EulerianSpec, pivot: int = 0) -> Poly:
    f1, m1, nu, om, w = _pivot_parts(spec, pivot)
    a = spec.a
    _require_nonzero(pochhammer(f1 - a - w, w), "(f1 - a - omega)_omega")
    if a < 0:
        _require_nonzero(pochhammer(1 + a + m1, w), "(1 + a + m1)_omega")
    if w == 0:
        return Poly.constant(1)
    return second_mp_char_poly(MPParams(a, f1 + m1, f1, nu, om))


def monomial_expansion(spec: EulerianSpec, pivot: int = 0) -> Poly:
    """``sum_n (-m)_n (f1-a-omega)_n / ((f1)_n n!) * Qhat(n) x**n``."""
    if spec.r == 0:
        return Poly.constant(1)
    f1, m1, nu, om, w = _pivot_parts(spec, pivot)
    m = spec.m
    _check_bottom(f1, m)
    qhat = monomial_char_poly(spec, pivot)
    c = f1 - spec.a - w
    return Poly(
        pochhammer(-m, n) * pochhammer(c, n) / (pochhammer(f1, n) * factorial(n)) * qhat(n) for n in range(m + 1)
    )


def bernstein_char_poly(spec: EulerianSpec, pivot: int = 0) -> Poly:
    f1, m1, nu, om, w = _pivot_parts(spec, pivot)
    return mp_operator(block_poly(nu, om), f1 + m1, f1, w)


def bernstein_expansion(spec: EulerianSpec, pivot: int = 0) -> list[Fraction]:
    """Coefficients ``c_k`` of ``hatw`` in the basis ``x**k (1-x)**(m-k)``."""
    if spec.r == 0:
        return [Fraction(1)]
    f1, _, _, _, _ = _pivot_parts(spec, pivot)
    m, a = spec.m, spec.a
    _check_bottom(f1, m)
    q = bernstein_char_poly(spec, pivot)
    return [
        (-1) ** k * pochhammer(a, k) * pochhammer(-m, k) / (pochhammer(f1, k) * factorial(k)) * q(k)
        for k in range(m + 1)
    ]


def connection_polynomial(spec: EulerianSpec, pivot: int = 0) -> tuple[Fraction, Poly]:
    """Parameter and generating polynomial of the transformed f-Eulerian form."""
    f1, m1, nu, om, w = _pivot_parts(spec, pivot)
    a = spec.a
    r_hat = mp_operator(block_poly(nu, om, normalize=False), a, f1, w)
    g = Poly.rising(f1, m1) * r_hat / spec.normalization
    return f1 - a - w, g


def connection_whF_whR(spec: EulerianSpec, order: int | None = None) -> bool:
    """``(1-y)**m hatw(y/(y-1)) == w(y) == hatw(f1-a-omega; G | y)``."""
    lhs = euler_substitute(hatw_direct(spec), spec.m)
    if lhs != w_polynomial(spec):
        return False
    if spec.r == 0:
        return lhs == Poly.constant(1)
    a_new, g = connection_polynomial(spec)
    rhs = hatw_from_poly(a_new, g, degree=spec.m)
    if order is not None and order > spec.m + 2:
        from .feulerian import generating_series

        tail = generating_series(a_new, g, order) * binomial_series(-(spec.m + a_new), order)
        if any(tail[k] for k in range(spec.m + 1, order + 1)):
            return False
    return lhs == rhs


# terminating identities


def gasper_sides(n: int, b, c, f: Sequence, m_vec: Sequence[int]) -> tuple[Fraction, Fraction]:
    """Both sides of Gasper's identity at ``a = -n`` with integer ``b >= 0``.

    Gamma ratios become ``1/n!``, ``(c-b)_b`` and ``1/(b+n)!``.
    """
    b, c = to_rational(b), to_rational(c)
    f = [to_rational(x) for x in f]
    if n < 0:
        raise ValueError("n must be non-negative")
    if b.denominator != 1 or b < 0:
        raise ValueError("exact evaluation needs b to be a non-negative integer")
    if len(f) != len(m_vec):
        raise ValueError("f and m_vec differ in length")
    if c + n - b - sum(m_vec) <= 0:
        raise ValueError("convergence condition c - a - b - sum(m) > 0 fails")
    if is_nonpositive_integer(c) or any(is_nonpositive_integer(x) for x in f):
        raise PoleError("c or some f_i is a non-positive integer")
    bi = int(b)
    lhs = terminating_hypergeometric([-n, b, *(x + k for x, k in zip(f, m_vec))], [c, *f]) / factorial(n)
    pref = (
        pochhammer(c - b, bi)
        * vector_pochhammer([x - b for x in f], m_vec)
        / (factorial(bi + n) * vector_pochhammer(f, m_vec))
    )
    if pref == 0:
        # (f - b)_m = 0 forces a bottom pole on the right: a limit, not a value
        raise PoleError("(f - b)_m vanishes; the right side is an indeterminate limit")
    rhs = pref * terminating_hypergeometric(
        [b, 1 - c + b, *(1 - x + b for x in f)],
        [1 + b + n, *(1 - x - k + b for x, k in zip(f, m_vec))],
    )
    return lhs, rhs


def gasper_identity_check(n: int, b, c, f: Sequence, m_vec: Sequence[int]) -> bool:
    lhs, rhs = gasper_sides(n, b, c, f, m_vec)
    return lhs == rhs


def terminating_sum_check(k: int, f: Sequence, m_vec: Sequence[int]) -> bool:
    """Reduce ``F(-k, f+m; f)`` to sums over the blocks after the first one."""
    f = [to_rational(x) for x in f]
    if not f:
        raise ValueError("need at least one block")
    m = sum(m_vec)
    f1, m1 = f[0], m_vec[0]
    w = m - m1
    if pochhammer(f1, k) == 0:
        raise PoleError("(f1)_k vanishes")
    lhs = terminating_hypergeometric([-k, *(x + j for x, j in zip(f, m_vec))], f)
    if k > m:
        return lhs == 0
    rest_f, rest_m = f[1:], m_vec[1:]

    def reduced(j):
        return terminating_hypergeometric([-j, *(x + i for x, i in zip(rest_f, rest_m))], rest_f)

    total = Fraction(0)
    for j in range(min(k, w) + 1):
        total += (
            pochhammer(-k, j) * pochhammer(k - m, w - j) * pochhammer(f1 + m1, j)
            / ((-1) ** j * factorial(j))
            * reduced(j)
        )
    rhs = pochhammer(-m, k) / (pochhammer(-m, w) * pochhammer(f1, k)) * total
    return lhs == rhs
