"""d-Narayana polynomials counted by ascents of ballot paths, built by several routes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .exactmath import binomial, determinant, pochhammer, terminating_hypergeometric
from .feulerian import EulerianSpec, hatw_direct
from .millerparis import MPParams, block_poly, gasper_identity_check, mp_operator, second_mp_char_poly
from .polyalgebra import Poly, sturm_zone_counts

ORACLE_BUDGET = 16


@dataclass(frozen=True)
class NarayanaParams:
    d: int
    m: int

    def __post_init__(self):
        if self.d < 2 or self.m < 1:
            raise ValueError("need d >= 2 and m >= 1")

    @property
    def K(self) -> int:
        return (self.d - 1) * (self.m - 1)

    @property
    def M(self) -> int:
        return (self.d - 1) * self.m

    @property
    def L(self) -> int:
        return (self.d - 2) * (self.m - 1)


def ballot_path_oracle(d: int, m: int) -> Poly:
    """Count ascents over every lattice path in the chamber ``x_1 <= ... <= x_d``.

    Step ``j`` raises coordinate ``j`` and is allowed only while it stays at
    or below coordinate ``j + 1``; plain depth-first enumeration.
    """
    if d * m > ORACLE_BUDGET:
        raise ValueError(f"enumeration budget d*m <= {ORACLE_BUDGET} exceeded")
    counts = [0] * (d * m + 1)
    pos = [0] * d

    def walk(prev: int, steps: int, asc: int) -> None:
        if steps == d * m:
            counts[asc] += 1
            return
        for j in range(d):
            if pos[j] == m:
                continue
            if j + 1 < d and pos[j] + 1 > pos[j + 1]:
                continue
            pos[j] += 1
            walk(j, steps + 1, asc + (1 if 0 <= prev < j else 0))
            pos[j] -= 1

    walk(-1, 0, 0)
    return Poly(counts)


def hoggatt_binomial(d: int, m: int, j: int) -> Fraction:
    if j < 0:
        raise ValueError("j must be non-negative")
    out = Fraction(1)
    for k in range(1, d + 1):
        out *= pochhammer(m + k, j) / pochhammer(k, j)
    return out


def hankel_hoggatt_check(d: int, k: int, m: int) -> bool:
    """Hoggatt binomial ``<k; m>_d`` against a signed Hankel determinant of binomials."""
    if d > 5:
        raise ValueError("determinant budget d <= 5 exceeded")
    if k < m:
        raise ValueError("need k >= m")
    mat = [[binomial(k + i + j, m + d - 1) for j in range(d)] for i in range(d)]
    return hoggatt_binomial(d, m, k - m) == (-1) ** (d * (d - 1) // 2) * determinant(mat)


def narayana_sulanke(d: int, m: int) -> Poly:
    p = NarayanaParams(d, m)
    top = d * m
    coeffs = [
        sum(pochhammer(-top - 1, k - j) / factorial(k - j) * hoggatt_binomial(d, m, j) for j in range(k + 1))
        for k in range(top + 1)
    ]
    if any(coeffs[p.K + 1 :]):
        raise ArithmeticError("coefficients beyond (d-1)(m-1) do not vanish")
    return Poly(coeffs[: p.K + 1])


def narayana_spec(d: int, m: int) -> EulerianSpec:
    blocks = tuple((k, m - 1) for k in range(2, d + 1)) if m > 1 else ()
    return EulerianSpec(m + d, blocks)


def narayana_via_feulerian(d: int, m: int) -> Poly:
    NarayanaParams(d, m)
    return hatw_direct(narayana_spec(d, m))


def hat_q_direct(d: int, m: int, top_shift: int | None = None) -> Poly:
    """Closed double-sum form of the second characteristic polynomial.

    ``top_shift`` overrides the second top parameter of the prefactor, which
    defaults to ``-K-2``; ``-M-3`` is kept reachable for comparison.
    """
    p = NarayanaParams(d, m)
    K, M, L = p.K, p.M, p.L
    top = -K - 2 if top_shift is None else top_shift
    neg_t = Poly((0, -1))
    out = Poly()
    for j in range(L + 1):
        hyp = terminating_hypergeometric(
            [-j, *range(m + 1, m + d)],
            [K + 3 - j, *range(3, d + 1)],
        )
        coef = (
            pochhammer(m + d, j) * pochhammer(top, j) * hyp
            / ((-1) ** j * pochhammer(-M, L) * pochhammer(-K, j) * factorial(j))
        )
        term = Poly.constant(1)
        for i in range(j):
            term = term * (neg_t + i)
        out = out + term * Poly.rising(-M, L - j) * coef
    return out


def narayana_block(d: int, m: int) -> tuple[tuple, tuple]:
    if m == 1 or d == 2:
        return (), ()
    return tuple(range(3, d + 1)), (m - 1,) * (d - 2)


def hat_q_composition(d: int, m: int) -> Poly:
    nu, om = narayana_block(d, m)
    if not nu:
        return Poly.constant(1)
    return second_mp_char_poly(MPParams(m + d, m + 1, 2, nu, om))


def narayana_explicit(d: int, m: int, route: str = "both") -> Poly:
    """``1/(K+1) sum_j C(M,j) C(K+1,j+1) Qhat(j) x**j``."""
    p = NarayanaParams(d, m)
    direct = hat_q_direct(d, m)
    composed = hat_q_composition(d, m)
    if route == "both" and direct != composed:
        raise ArithmeticError("the two characteristic polynomial routes disagree")
    q = composed if route == "composition" else direct
    K, M = p.K, p.M
    return Poly(Fraction(comb(M, j) * comb(K + 1, j + 1), K + 1) * q(j) for j in range(K + 1))


def q_first(d: int, m: int) -> Poly:
    nu, om = narayana_block(d, m)
    return mp_operator(block_poly(nu, om), m + 1, 2, sum(om))


def q_tilde(d: int, m: int) -> Poly:
    nu, om = narayana_block(d, m)
    return mp_operator(block_poly(nu, om), m + d, 2, sum(om))


def r_reduced(d: int, m: int) -> Poly:
    """First operator applied to ``prod_{k=3}^{d} (k+t)_m / (k)_m``."""
    nu = tuple(range(3, d + 1))
    om = (m,) * (d - 2)
    return mp_operator(block_poly(nu, om), m + 1, 2, sum(om))


VARIANTS = ("K-basis", "M-basis", "M-1-basis")


def narayana_bernstein(d: int, m: int, variant: str = "K-basis") -> list[Fraction]:
    p = NarayanaParams(d, m)
    K, M, L = p.K, p.M, p.L
    if variant == "K-basis":
        q = q_first(d, m)
        return [
            pochhammer(-K, j) * pochhammer(m + d, j) / ((-1) ** j * pochhammer(2, j) * factorial(j)) * q(j)
            for j in range(K + 1)
        ]
    if variant == "M-basis":
        q = q_tilde(d, m)
        return [
            pochhammer(-M, j) * pochhammer(m + 1, j) / ((-1) ** j * pochhammer(2, j) * factorial(j)) * q(j)
            for j in range(M + 1)
        ]
    if variant == "M-1-basis":
        r = r_reduced(d, m)
        if d >= 3 and m >= 2 and r.degree != L - 1:
            raise ArithmeticError(f"reduced polynomial has degree {r.degree}, expected {L - 1}")
        return [
            (-1) ** j * pochhammer(1 - M, j) * pochhammer(m + 2, j) / (pochhammer(2, j) * factorial(j)) * r(j)
            for j in range(M)
        ]
    raise ValueError(f"unknown variant {variant!r}")


def bernstein_degree(d: int, m: int, variant: str) -> int:
    p = NarayanaParams(d, m)
    return {"K-basis": p.K, "M-basis": p.M, "M-1-basis": p.M - 1}[variant]


def reconstruct_bernstein(d: int, m: int, variant: str) -> Poly:
    return Poly.bernstein(narayana_bernstein(d, m, variant), bernstein_degree(d, m, variant))


def catalan_multidim(d: int, m: int) -> Fraction:
    out = Fraction(factorial(m * d))
    for j in range(d):
        out *= Fraction(factorial(j), factorial(m + j))
    return out


def coefficient_pair(d: int, m: int, n: int) -> tuple[Fraction, Fraction]:
    """Hypergeometric forms of the coefficients of ``x**n`` and ``x**(K-n)``."""
    p = NarayanaParams(d, m)
    K = p.K
    tops = list(range(m + 1, m + d + 1))
    bottoms = list(range(2, d + 1))
    left = pochhammer(-m * d - 1, n) / factorial(n) * terminating_hypergeometric(
        [-n, *tops], [m * d + 2 - n, *bottoms]
    )
    right = pochhammer(-m * d - 1, K - n) / factorial(K - n) * terminating_hypergeometric(
        [n - K, *tops], [1 + m + d + n, *bottoms]
    )
    return left, right


def palindrome_gasper_instance(d: int, m: int, n: int) -> bool:
    return gasper_identity_check(n, m + d, m * d + 2 - n, list(range(2, d + 1)), [m - 1] * (d - 1))


def palindrome_check(d: int, m: int, with_gasper: bool = True) -> bool:
    p = NarayanaParams(d, m)
    poly = narayana_sulanke(d, m)
    if poly.degree != p.K or poly.reversed() != poly:
        return False
    if with_gasper:
        for n in range(p.K + 1):
            left, right = coefficient_pair(d, m, n)
            if left != right or left != poly.coeff(n):
                return False
            if m > 1 and not palindrome_gasper_instance(d, m, n):
                return False
    return True


def negative_zero_check(d: int, m: int) -> bool:
    spec = narayana_spec(d, m)
    if not all(f + k < spec.a for f, k in spec.blocks):
        return False
    poly = narayana_via_feulerian(d, m)
    z = sturm_zone_counts(poly)
    return z.neg == NarayanaParams(d, m).K and z.nonreal == 0


def q_reflection_symmetry_check(d: int, m: int) -> bool:
    p = NarayanaParams(d, m)
    if m <= d - 2:
        raise ValueError("the polynomial identity needs m > d - 2")
    q = hat_q_composition(d, m)
    reflected = Poly((p.K, -1))
    lhs = Poly.rising(2, d - 2) * q
    rhs = Poly.rising(2, d - 2).compose(reflected) * q.compose(reflected)
    return lhs == rhs


def all_routes(d: int, m: int, include_oracle: bool = True) -> dict[str, Poly]:
    routes = {
        "sulanke": narayana_sulanke(d, m),
        "feulerian": narayana_via_feulerian(d, m),
        "explicit": narayana_explicit(d, m),
    }
    for v in VARIANTS:
        routes[f"bernstein:{v}"] = reconstruct_bernstein(d, m, v)
    if include_oracle and d * m <= ORACLE_BUDGET:
        routes["oracle"] = ballot_path_oracle(d, m)
    return routes
