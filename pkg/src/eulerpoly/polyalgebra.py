"""Dense univariate polynomials over the rationals and exact real-root counting.

Root counts come from Sturm chains applied to the factors of a square-free
decomposition, so every count carries multiplicity.  No root is ever
approximated numerically; isolating intervals have rational endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exactmath import format_rational, pochhammer, to_rational


class NotRealRootedError(ValueError):
    pass


class Poly:
    """Immutable dense polynomial; ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # construction helpers
    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def linear(cls, root) -> "Poly":
        """``x - root``."""
        return cls((-to_rational(root), 1))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Poly":
        p = cls.constant(1)
        for r in roots:
            p = p * cls.linear(r)
        return p

    @classmethod
    def rising(cls, c, n: int) -> "Poly":
        """``(c + t)_n`` as a polynomial in ``t``."""
        c = to_rational(c)
        p = cls.constant(1)
        for i in range(n):
            p = p * cls((c + i, 1))
        return p

    @classmethod
    def bernstein(cls, coeffs: Sequence, degree: int) -> "Poly":
        """``sum_k c_k x**k (1-x)**(degree-k)``."""
        one_minus = cls((1, -1))
        total = cls()
        for k, c in enumerate(coeffs):
            c = to_rational(c)
            if c:
                total = total + (cls.x() ** k) * (one_minus ** (degree - k)) * c
        return total

    # basic protocol
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __call__(self, t):
        t = to_rational(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    # arithmetic
    def _coerce(self, other) -> "Poly":
        return other if isinstance(other, Poly) else Poly.constant(other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = to_rational(other)
            return Poly(c * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        result = Poly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, c) -> "Poly":
        c = to_rational(c)
        return Poly(a / c for a in self.coeffs)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - dd - 1, -1, -1):
            q = rem[k + dd] / lead
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return Poly(quot), Poly(rem[:dd] if dd > 0 else [])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self / self.leading

    def compose(self, inner: "Poly") -> "Poly":
        """``self(inner(t))`` by Horner's scheme."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def reflect(self) -> "Poly":
        """``p(-t)``."""
        return Poly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def reversed(self, degree: int | None = None) -> "Poly":
        """``t**degree p(1/t)`` with ``degree`` defaulting to ``deg p``."""
        n = self.degree if degree is None else degree
        if n < self.degree:
            raise ValueError("reversal degree below the polynomial degree")
        return Poly(self.coeff(n - i) for i in range(n + 1))

    def to_json(self) -> dict:
        return {"coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "Poly":
        return cls(data["coeffs"])


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd (zero only when both inputs are zero)."""
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm: monic square-free, pairwise coprime ``(factor, multiplicity)``."""
    if p.is_zero():
        raise ValueError("zero polynomial has no square-free decomposition")
    if p.degree == 0:
        return []
    a = p.monic()
    da = a.derivative()
    b = poly_gcd(a, da)
    c = a.exact_div(b)
    d = da.exact_div(b) - c.derivative()
    out = []
    i = 1
    while c.degree > 0:
        g = poly_gcd(c, d)
        if g.degree > 0:
            out.append((g, i))
        c = c.exact_div(g)
        d = d.exact_div(g) - c.derivative()
        i += 1
    return out


def squarefree_part(p: Poly) -> Poly:
    out = Poly.constant(1)
    for factor, _ in squarefree_decomposition(p):
        out = out * factor
    return out


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


class SturmChain:
    """Sturm sequence of a square-free polynomial."""

    def __init__(self, p: Poly):
        if p.is_zero():
            raise ValueError("Sturm chain of the zero polynomial")
        chain = [p, p.derivative()]
        while not chain[-1].is_zero() and chain[-1].degree > 0:
            chain.append(-(chain[-2] % chain[-1]))
        if chain[-1].is_zero():
            chain.pop()
        self.chain = chain

    def _variations(self, signs: list[int]) -> int:
        signs = [s for s in signs if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    def variations_at(self, t) -> int:
        return self._variations([_sign(q(t)) for q in self.chain])

    def variations_at_infinity(self, positive: bool) -> int:
        signs = []
        for q in self.chain:
            s = _sign(q.leading)
            if not positive and q.degree % 2:
                s = -s
            signs.append(s)
        return self._variations(signs)

    def count(self, lo=None, hi=None) -> int:
        """Distinct roots in ``(lo, hi)``; ``None`` means infinity.  Endpoints must not be roots."""
        v_lo = self.variations_at_infinity(False) if lo is None else self.variations_at(lo)
        v_hi = self.variations_at_infinity(True) if hi is None else self.variations_at(hi)
        return v_lo - v_hi


@dataclass(frozen=True)
class ZoneCounts:
    """Root counts with multiplicity by location on the real line."""

    neg: int = 0
    at_zero: int = 0
    in_01: int = 0
    at_one: int = 0
    gt_one: int = 0
    nonreal: int = 0

    @property
    def total(self) -> int:
        return self.neg + self.at_zero + self.in_01 + self.at_one + self.gt_one + self.nonreal

    @property
    def real(self) -> int:
        return self.total - self.nonreal

    def __add__(self, other: "ZoneCounts") -> "ZoneCounts":
        return ZoneCounts(
            self.neg + other.neg,
            self.at_zero + other.at_zero,
            self.in_01 + other.in_01,
            self.at_one + other.at_one,
            self.gt_one + other.gt_one,
            self.nonreal + other.nonreal,
        )

    def to_json(self) -> dict:
        return {
            "neg": self.neg,
            "at_zero": self.at_zero,
            "in_01": self.in_01,
            "at_one": self.at_one,
            "gt_one": self.gt_one,
            "nonreal": self.nonreal,
        }


def root_multiplicity(p: Poly, root) -> int:
    """Multiplicity of a rational ``root`` by repeated exact division."""
    if p.is_zero():
        raise ValueError("zero polynomial")
    lin = Poly.linear(root)
    k = 0
    while True:
        q, r = p.divmod(lin)
        if not r.is_zero():
            return k
        p, k = q, k + 1


def _strip_root(p: Poly, root) -> tuple[Poly, int]:
    lin = Poly.linear(root)
    k = 0
    while True:
        q, r = p.divmod(lin)
        if not r.is_zero():
            return p, k
        p, k = q, k + 1


def sturm_zone_counts(p: Poly) -> ZoneCounts:
    if p.is_zero():
        raise ValueError("zone counts of the zero polynomial")
    q, at_zero = _strip_root(p, 0)
    q, at_one = _strip_root(q, 1)
    neg = in_01 = gt_one = 0
    for factor, mult in squarefree_decomposition(q):
        chain = SturmChain(factor)
        neg += mult * chain.count(None, 0)
        in_01 += mult * chain.count(0, 1)
        gt_one += mult * chain.count(1, None)
    real = neg + at_zero + in_01 + at_one + gt_one
    return ZoneCounts(neg, at_zero, in_01, at_one, gt_one, p.degree - real)


def is_real_rooted(p: Poly) -> bool:
    return sturm_zone_counts(p).nonreal == 0


def count_real_roots(p: Poly) -> int:
    return sturm_zone_counts(p).real


def cauchy_bound(p: Poly) -> Fraction:
    """Every root has absolute value strictly below this bound."""
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


def isolate_real_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint open intervals ``(lo, hi)`` each holding exactly one distinct real root.

    Endpoints are rational non-roots; the list is sorted left to right.
    """
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return []
    chain = SturmChain(sf)
    bound = cauchy_bound(sf)
    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = chain.count(lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append((lo, hi))
            continue
        # split at a non-root point near the middle
        mid = (lo + hi) / 2
        k = 3
        while sf(mid) == 0:
            mid = lo + (hi - lo) * Fraction(k // 2, k)
            k += 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort()
    return out


def refine_interval(p: Poly, interval: tuple[Fraction, Fraction], width) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of square-free ``p`` until narrower than ``width``."""
    chain = SturmChain(p)
    lo, hi = interval
    width = to_rational(width)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if p(mid) == 0:
            eps = min(width, hi - lo) / 4
            return mid - eps, mid + eps
        if chain.count(lo, mid):
            hi = mid
        else:
            lo = mid
    return lo, hi


def rational_roots(p: Poly) -> list[Fraction]:
    """All distinct rational roots, found without factoring integers.

    A rational root ``u/v`` of an integer polynomial has ``v`` dividing the
    leading coefficient ``D``; two such candidates differ by at least
    ``1/D**2``, so an isolating interval narrower than ``1/(2 D**2)`` pins the
    candidate, which is then checked exactly.
    """
    sf = squarefree_part(p)
    if sf.degree <= 0:
        return []
    denom = 1
    for c in sf.coeffs:
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    lead = abs(sf.leading * denom)
    assert lead.denominator == 1
    lead = lead.numerator
    width = Fraction(1, 2 * lead * lead)
    roots = []
    for interval in isolate_real_roots(sf):
        lo, hi = refine_interval(sf, interval, width)
        candidate = ((lo + hi) / 2).limit_denominator(lead)
        if sf(candidate) == 0:
            roots.append(candidate)
    return roots


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class RootSite:
    """One distinct real root of ``p*q`` with its multiplicity in each factor."""

    interval: tuple[Fraction, Fraction]
    mult_p: int
    mult_q: int


def _multiplicity_in(decomp: list[tuple[SturmChain, int]], lo, hi) -> int:
    for chain, mult in decomp:
        if chain.count(lo, hi):
            return mult
    return 0


def merged_root_sites(p: Poly, q: Poly) -> list[RootSite]:
    """Sorted distinct real roots of ``p*q`` labelled by their multiplicities in ``p`` and ``q``."""
    if p.is_zero() or q.is_zero():
        raise ValueError("zero polynomial")
    dp = [(SturmChain(f), k) for f, k in squarefree_decomposition(p)]
    dq = [(SturmChain(f), k) for f, k in squarefree_decomposition(q)]
    sites = []
    for lo, hi in isolate_real_roots(p * q):
        sites.append(RootSite((lo, hi), _multiplicity_in(dp, lo, hi), _multiplicity_in(dq, lo, hi)))
    return sites


def interlace_check(p: Poly, q: Poly, strict: bool = False) -> bool:
    """Whether the real roots of ``p`` and ``q`` alternate.

    Weak form: coincident roots may be ordered either way, so a root of
    multiplicity ``k`` in one polynomial needs multiplicity at least ``k-1``
    in the other.  ``strict`` demands simple, distinct roots.
    """
    if not (is_real_rooted(p) and is_real_rooted(q)):
        raise NotRealRootedError("interlacing is defined for real-rooted polynomials")
    if abs(p.degree - q.degree) > 1:
        raise ValueError("degrees differ by more than one")
    sites = merged_root_sites(p, q) if p.degree > 0 and q.degree > 0 else None
    if sites is None:
        # a constant against a polynomial of degree <= 1 interlaces vacuously
        return True
    if strict and any(s.mult_p + s.mult_q != 1 for s in sites):
        return False
    return _alternates([(s.mult_p, s.mult_q) for s in sites])


def _site_orderings(kp: int, kq: int) -> list[tuple[str, str]]:
    """Alternating arrangements of a tie: ``(first, last)`` label pairs."""
    if kp == kq:
        return [("p", "q"), ("q", "p")] if kp else []
    if kp == kq + 1:
        return [("p", "p")]
    if kq == kp + 1:
        return [("q", "q")]
    return []


def _alternates(sites: list[tuple[int, int]]) -> bool:
    lasts = {None}
    for kp, kq in sites:
        options = _site_orderings(kp, kq)
        lasts = {last for first, last in options for prev in lasts if prev != first}
        if not lasts:
            return False
    return True


def follows_pattern(p: Poly, q: Poly, pattern: str) -> bool:
    """Whether the ascending roots of ``p`` (label ``P``) and ``q`` (``Q``) read as ``pattern``.

    Ties may be read in any order, which gives the non-strict chains.
    """
    sites = merged_root_sites(p, q)
    pos = 0
    for s in sites:
        width = s.mult_p + s.mult_q
        chunk = pattern[pos : pos + width]
        if chunk.count("P") != s.mult_p or chunk.count("Q") != s.mult_q:
            return False
        pos += width
    return pos == len(pattern)


def falling_basis_eval(coeffs: Sequence, t) -> Fraction:
    """Evaluate ``sum_k c_k (t)_k``; handy for Pochhammer-basis expansions."""
    t = to_rational(t)
    return sum((to_rational(c) * pochhammer(t, k) for k, c in enumerate(coeffs)), Fraction(0))
