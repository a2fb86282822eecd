"""Independent reference computations used only by the tests.

Nothing here imports the package: sympy provides series and root counts, and
the Jacobi-Pineiro oracle uses Beta-function moments.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import sympy as sp

X = sp.Symbol("x")
T = sp.Symbol("t")


def to_sympy(q) -> sp.Rational:
    q = Fraction(q)
    return sp.Rational(q.numerator, q.denominator)


def from_sympy(v) -> Fraction:
    v = sp.Rational(v)
    return Fraction(int(v.p), int(v.q))


def coeff_list(expr, var=X) -> list[Fraction]:
    """Ascending coefficients of a polynomial expression, trailing zeros trimmed."""
    p = sp.Poly(sp.expand(expr), var)
    out = [from_sympy(c) for c in reversed(p.all_coeffs())]
    while out and out[-1] == 0:
        out.pop()
    return out


def hatw_by_euler_operator(a, f_coeffs) -> list[Fraction]:
    """``(1-x)**(m+a) * F(x d/dx) (1-x)**(-a)`` with ``m = deg F``."""
    a = to_sympy(a)
    base = (1 - X) ** (-a)
    total = 0
    term = base
    for k, c in enumerate(f_coeffs):
        if k:
            term = sp.simplify(X * sp.diff(term, X))
        total += to_sympy(c) * term
    m = len(f_coeffs) - 1
    return coeff_list(sp.simplify(total * (1 - X) ** (m + a)))


def rising_poly(c, n: int):
    out = sp.Integer(1)
    for i in range(n):
        out *= T + to_sympy(c) + i
    return out


def block_coeffs(blocks, normalize: bool = True) -> list[Fraction]:
    expr = sp.Integer(1)
    for f, m in blocks:
        expr *= rising_poly(f, m)
        if normalize:
            expr /= sp.rf(to_sympy(f), m)
    return coeff_list(expr, T) or [Fraction(0)]


def zone_counts(coeffs) -> dict:
    """Root counts with multiplicity from sympy's exact real root isolation."""
    p = sp.Poly(list(reversed([to_sympy(c) for c in coeffs])), X)
    out = {"neg": 0, "at_zero": 0, "in_01": 0, "at_one": 0, "gt_one": 0}
    real = 0
    for root in p.real_roots():
        real += 1
        if root < 0:
            out["neg"] += 1
        elif root == 0:
            out["at_zero"] += 1
        elif root < 1:
            out["in_01"] += 1
        elif root == 1:
            out["at_one"] += 1
        else:
            out["gt_one"] += 1
    out["nonreal"] = p.degree() - real
    return out


def toeplitz_minor(seq, rows, cols) -> Fraction:
    mat = sp.Matrix([[to_sympy(seq[j - i]) if j >= i else 0 for j in cols] for i in rows])
    return from_sympy(mat.det())


def poch(a, n: int) -> Fraction:
    out = Fraction(1)
    for i in range(n):
        out *= a + i
    return out


def jp_orthogonality_defects(coeffs, alpha, beta, n_vec) -> list[Fraction]:
    """``int_0^1 P(x) x**(alpha_j + k) (1-x)**beta dx / B(alpha_j + k + 1, beta + 1)`` for ``k < n_j``.

    Every entry vanishes exactly when ``P`` is the type II multiple
    orthogonal polynomial; moments of the Beta density are Pochhammer ratios.
    """
    out = []
    for aj, nj in zip(alpha, n_vec):
        for k in range(nj):
            p0 = Fraction(aj) + k + 1
            q0 = Fraction(beta) + 1
            out.append(sum(Fraction(c) * poch(p0, i) / poch(p0 + q0, i) for i, c in enumerate(coeffs)))
    return out


def monic_shifted_jacobi(n: int, alpha, beta) -> list[Fraction]:
    """Monic polynomial orthogonal for ``x**alpha (1-x)**beta`` on ``[0, 1]``."""
    expr = sp.jacobi_poly(n, to_sympy(beta), to_sympy(alpha), 2 * X - 1)
    c = coeff_list(expr)
    return [v / c[-1] for v in c]


def ballot_paths(d: int, m: int):
    """All words with ``m`` copies of each letter whose prefixes never let a later letter lead."""
    counts = [0] * d

    def rec(word):
        if len(word) == d * m:
            yield tuple(word)
            return
        for j in range(d):
            if counts[j] < m and (j == 0 or counts[j] < counts[j - 1]):
                counts[j] += 1
                word.append(j)
                yield from rec(word)
                word.pop()
                counts[j] -= 1

    yield from rec([])


def narayana_by_descents(d: int, m: int) -> list[int]:
    """Distribution of descents ``w_i > w_{i+1}`` over ballot words."""
    dist = {}
    for w in ballot_paths(d, m):
        des = sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])
        dist[des] = dist.get(des, 0) + 1
    top = max(dist)
    return [dist.get(k, 0) for k in range(top + 1)]


def catalan(n: int) -> int:
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))
