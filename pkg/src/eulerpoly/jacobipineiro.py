"""Type II Jacobi-Pineiro polynomials built from their terminating hypergeometric form.

The polynomial with parameters ``alpha``, ``beta`` and multi-index ``n`` is a
scalar multiple of the f-Eulerian numerator with ``a = -n - beta`` and blocks
``(alpha_i + 1, n_i)``; nothing here uses orthogonality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence

from .exactmath import PoleError, format_rational, pochhammer, terminating_hypergeometric, to_rational
from .feulerian import EulerianSpec, euler_substitute, hatw_direct, hatw_from_poly
from .millerparis import GuardError, block_poly, mp_operator
from .narayana import NarayanaParams, narayana_sulanke, q_first, q_tilde, r_reduced
from .polyalgebra import Poly, ZoneCounts, interlace_check, rational_roots, root_multiplicity, sturm_zone_counts


@dataclass(frozen=True)
class JPParams:
    alpha: tuple
    beta: Fraction
    n_vec: tuple

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(to_rational(x) for x in self.alpha))
        object.__setattr__(self, "beta", to_rational(self.beta))
        object.__setattr__(self, "n_vec", tuple(int(k) for k in self.n_vec))
        if len(self.alpha) != len(self.n_vec):
            raise ValueError("alpha and n_vec differ in length")
        if any(k < 0 for k in self.n_vec):
            raise ValueError("multi-index entries must be non-negative")
        if self.denominator() == 0:
            raise PoleError("(n + alpha + beta + 1)_n vanishes")

    @property
    def n(self) -> int:
        return sum(self.n_vec)

    @property
    def canonical(self) -> bool:
        if self.beta <= -1 or any(x <= -1 for x in self.alpha):
            return False
        for i, x in enumerate(self.alpha):
            for y in self.alpha[i + 1 :]:
                if (x - y).denominator == 1:
                    return False
        return True

    def denominator(self) -> Fraction:
        out = Fraction(1)
        for x, k in zip(self.alpha, self.n_vec):
            out *= pochhammer(self.n + x + self.beta + 1, k)
        return out

    def spec(self) -> EulerianSpec:
        blocks = tuple((x + 1, k) for x, k in zip(self.alpha, self.n_vec) if k > 0)
        return EulerianSpec(-self.n - self.beta, blocks)

    def prefactor(self) -> Fraction:
        num = Fraction((-1) ** self.n)
        for x, k in zip(self.alpha, self.n_vec):
            num *= pochhammer(x + 1, k)
        return num / self.denominator()

    def expanded_roots(self) -> list[Fraction]:
        return sorted(x + i for x, k in zip(self.alpha, self.n_vec) for i in range(k))

    def to_json(self) -> dict:
        return {
            "alpha": [format_rational(x) for x in self.alpha],
            "beta": format_rational(self.beta),
            "n": list(self.n_vec),
            "canonical": self.canonical,
        }


def jp_polynomial(params: JPParams) -> Poly:
    return hatw_direct(params.spec()) * params.prefactor()


@dataclass(frozen=True)
class JPZeroReport:
    counts: ZoneCounts
    hypothesis: str | None
    confirmed: bool | None

    def to_json(self) -> dict:
        return {"zones": self.counts.to_json(), "hypothesis": self.hypothesis, "confirmed": self.confirmed}


def jp_zero_location(params: JPParams) -> JPZeroReport:
    p = jp_polynomial(params)
    n = params.n
    z = sturm_zone_counts(p) if p.degree > 0 else ZoneCounts()
    alphas_ok = all(x > -1 for x, k in zip(params.alpha, params.n_vec) if k > 0)
    beta = params.beta
    if n == 0 or not alphas_ok:
        return JPZeroReport(z, None, None)
    if beta > -1:
        return JPZeroReport(z, "unit_interval", z.in_01 == n)
    if -2 < beta <= -1:
        # with a single root the escaping zero needs a < largest block root
        top = max(x for x, k in zip(params.alpha, params.n_vec) if k > 0)
        if n == 1 and top + beta + 2 <= 0:
            return JPZeroReport(z, None, None)
        ok = z.in_01 == n - 1 and z.at_one + z.gt_one == 1
        if beta == -1:
            ok = ok and z.at_one == 1
        return JPZeroReport(z, "unit_interval_but_one", ok)
    return JPZeroReport(z, None, None)


def _contained(small: list, big: list) -> bool:
    pool = list(big)
    for x in small:
        if x not in pool:
            return False
        pool.remove(x)
    return True


def jp_interlacing_check(p1: JPParams, p2: JPParams, strict: bool = False) -> bool:
    if p1.n - p2.n != 1:
        raise ValueError("degrees must differ by exactly one")
    if p1.beta != p2.beta:
        raise ValueError("both polynomials must share beta")
    if not _contained(p2.expanded_roots(), p1.expanded_roots()):
        raise ValueError("block roots of the smaller index are not contained in the larger")
    return interlace_check(jp_polynomial(p1), jp_polynomial(p2), strict=strict)


def _pivot(params: JPParams, pivot: int):
    if params.n_vec[pivot] == 0:
        raise ValueError("pivot block is empty")
    a1, n1 = params.alpha[pivot], params.n_vec[pivot]
    rest = [(x, k) for i, (x, k) in enumerate(zip(params.alpha, params.n_vec)) if i != pivot and k > 0]
    nu = tuple(x + 1 for x, _ in rest)
    om = tuple(k for _, k in rest)
    return a1, n1, nu, om, sum(om)


def _partial_prefactor(params: JPParams, a1: Fraction, n1: int) -> Fraction:
    return (-1) ** params.n * pochhammer(a1 + 1, n1) / params.denominator()


def jp_monomial_expansion(params: JPParams, pivot: int = 0) -> Poly:
    a1, n1, nu, om, w = _pivot(params, pivot)
    n, beta = params.n, params.beta
    a = -n - beta
    rho = a1 + 1
    c = a1 + n1 + beta + 1
    if pochhammer(rho - a - w, w) == 0:
        raise GuardError("(rho - a - omega)_omega vanishes")
    if a < 0 and pochhammer(1 + a + n1, w) == 0:
        raise GuardError("(1 + a + n1)_omega vanishes")
    h = block_poly(nu, om, normalize=False)
    qhat = mp_operator(mp_operator(h, a1 + n1 + 1, rho, w), a, rho, w) if w else h
    pref = _partial_prefactor(params, a1, n1)
    coeffs = []
    for k in range(n + 1):
        den = pochhammer(rho, k) * factorial(k)
        if den == 0:
            raise PoleError("(alpha_1 + 1)_k vanishes")
        coeffs.append(pref * pochhammer(-n, k) * pochhammer(c, k) / den * qhat(k))
    return Poly(coeffs)


def jp_bernstein_expansion(params: JPParams, pivot: int = 0) -> list[Fraction]:
    n, beta = params.n, params.beta
    if n == 0:
        return [params.prefactor()]
    a1, n1, nu, om, w = _pivot(params, pivot)
    rho = a1 + 1
    h = block_poly(nu, om, normalize=False)
    q = mp_operator(h, a1 + n1 + 1, rho, w) if w else h
    pref = _partial_prefactor(params, a1, n1)
    out = []
    for k in range(n + 1):
        den = pochhammer(rho, k) * factorial(k)
        if den == 0:
            raise PoleError("(alpha_1 + 1)_k vanishes")
        out.append(pref * (-1) ** k * pochhammer(-n, k) * pochhammer(-n - beta, k) / den * q(k))
    return out


def rhat_forms(
    alpha: Sequence, beta, n_vec: Sequence[int], t, sheppard_shift: int = 1
) -> tuple[Fraction, Fraction, Fraction]:
    """Three evaluations of the two-weight transformed polynomial at ``t``.

    The first is the Chu-Vandermonde reduced sum, the second its Sheppard
    transform and the third the operator applied directly.  The Sheppard
    prefactor uses ``(alpha_2 - alpha_1 + sheppard_shift)_{n_2}``; a shift of
    0 gives a form off by a constant factor.
    """
    a1, a2 = (to_rational(x) for x in alpha)
    beta = to_rational(beta)
    n1, n2 = n_vec
    n = n1 + n2
    t = to_rational(t)
    den = pochhammer(a1 + 1 + n1 + beta, n2)
    if den == 0:
        raise PoleError("(alpha_1 + 1 + n_1 + beta)_{n_2} vanishes")
    form_a = (
        pochhammer(a2 + 1, n2) * pochhammer(a1 + 1 + n1 + beta + t, n2) / den
        * terminating_hypergeometric([-n2, -t, -n - beta], [-a1 - n - beta - t, a2 + 1])
    )
    form_b = (
        (-1) ** n2 * pochhammer(a2 + 1, n2) * pochhammer(a2 - a1 + sheppard_shift, n2) / den
        * terminating_hypergeometric([-n2, a2 + 1 + t, n + a2 + beta + 1], [a2 + 1, a2 + 1 - a1])
    )
    op = mp_operator(block_poly([a2 + 1], [n2], normalize=False), -n - beta, a1 + 1, n2)
    return form_a, form_b, op(t)


def rhat_two_weights_check(alpha: Sequence, beta, n_vec: Sequence[int]) -> bool:
    n2 = n_vec[1]
    for t in range(n2 + 1):
        a, b, c = rhat_forms(alpha, beta, n_vec, t)
        if not (a == b == c):
            return False
    return True


# d-Narayana polynomials as Jacobi-Pineiro polynomials


JP_VARIANTS = ("beta_1_minus_d", "beta_d_minus_1", "beta_d_minus_2")


@dataclass(frozen=True)
class NarayanaJPReport:
    variant: str
    beta: Fraction
    a: Fraction
    weight: int
    lead_block: tuple
    char_poly: Poly
    expected_char_degree: int
    char_zones: ZoneCounts | None
    params: JPParams | None
    verified: bool

    def to_json(self) -> dict:
        return {
            "variant": self.variant,
            "beta": format_rational(self.beta),
            "a": format_rational(self.a),
            "weight": self.weight,
            "lead_block": [format_rational(self.lead_block[0]), self.lead_block[1]],
            "char_poly": self.char_poly.to_json(),
            "char_degree": self.char_poly.degree,
            "expected_char_degree": self.expected_char_degree,
            "char_poly_reflected_zones": self.char_zones.to_json() if self.char_zones else None,
            "params": self.params.to_json() if self.params else None,
            "verified": self.verified,
        }


def _variant_data(d: int, m: int, variant: str):
    """``(beta, weight, n1, characteristic polynomial, expected degree)``."""
    p = NarayanaParams(d, m)
    if variant == "beta_1_minus_d":
        return 1 - d, p.M, m + d - 2, q_first(d, m), p.L
    if variant == "beta_d_minus_1":
        return d - 1, p.K, m - 1, q_tilde(d, m), p.L
    if variant == "beta_d_minus_2":
        if d < 3 or m < 2:
            raise ValueError("this representation needs d >= 3 and m >= 2")
        return d - 2, p.K, m, r_reduced(d, m), p.L - 1
    raise ValueError(f"unknown variant {variant!r}")


def _connection_sides(d: int, m: int, variant: str):
    beta, weight, n1, char, expected = _variant_data(d, m, variant)
    beta = Fraction(beta)
    if char(0) == 0:
        raise ArithmeticError("characteristic polynomial vanishes at 0")
    g = Poly.rising(2, n1) / pochhammer(2, n1) * (char / char(0))
    a = -weight - beta
    lhs = euler_substitute(narayana_sulanke(d, m), weight)
    rhs = hatw_from_poly(a, g, degree=weight)
    return beta, weight, n1, char, expected, a, lhs, rhs


def narayana_as_jp(d: int, m: int, variant: str, max_size: int = 4) -> NarayanaJPReport:
    """Check ``(1-y)**W N(y/(y-1)) == hatw(-W-beta; G | y)`` for one representation.

    ``G`` is ``(2+t)_{n1}/(2)_{n1}`` times the normalized characteristic
    polynomial.  Its negated roots shifted by one are the remaining alpha
    parameters; they are only materialized when all are rational and the
    characteristic polynomial has its nominal degree, in which case the
    rebuilt Jacobi-Pineiro polynomial is compared as well.
    """
    if d > max_size or m > max_size:
        raise ValueError(f"desk-scale budget d, m <= {max_size} exceeded")
    beta, weight, n1, char, expected, a, lhs, rhs = _connection_sides(d, m, variant)
    verified = lhs == rhs
    reflected = char.reflect()
    zones = sturm_zone_counts(reflected) if reflected.degree > 0 else None
    params = None
    if n1 + char.degree == weight:
        etas = _rational_roots_with_multiplicity(reflected)
        if etas is not None:
            alpha = (Fraction(1), *(eta - 1 for eta in etas))
            n_vec = (n1, *(1 for _ in etas))
            try:
                params = JPParams(alpha, beta, n_vec)
            except PoleError:
                params = None
            if params is not None:
                verified = verified and jp_polynomial(params) / params.prefactor() == rhs
    return NarayanaJPReport(
        variant, beta, a, weight, (Fraction(1), n1), char, expected, zones, params, verified
    )


def _rational_roots_with_multiplicity(p: Poly) -> list[Fraction] | None:
    if p.degree <= 0:
        return []
    out = []
    for r in rational_roots(p):
        out.extend([r] * root_multiplicity(p, r))
    return sorted(out) if len(out) == p.degree else None


def characteristic_zones(d: int, m: int, variant: str) -> ZoneCounts:
    """Zones of the reflected characteristic polynomial, without the size budget."""
    char = _variant_data(d, m, variant)[3]
    return sturm_zone_counts(char.reflect())


def narayana_connection_identity(d: int, m: int, variant: str) -> bool:
    """The weighted identity alone, without the size budget or root extraction."""
    *_, lhs, rhs = _connection_sides(d, m, variant)
    return lhs == rhs
