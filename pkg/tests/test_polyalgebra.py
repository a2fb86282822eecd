from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rationals
from eulerpoly.polyalgebra import (
    NotRealRootedError,
    Poly,
    SturmChain,
    follows_pattern,
    interlace_check,
    is_real_rooted,
    isolate_real_roots,
    poly_gcd,
    rational_roots,
    refine_interval,
    root_multiplicity,
    squarefree_decomposition,
    squarefree_part,
    sturm_zone_counts,
)
from oracles import zone_counts

Q = Fraction

root_lists = st.lists(rationals(-3, 3, 4), min_size=1, max_size=6)


def test_arithmetic_basics():
    p = Poly([1, 2, 1])
    assert p == Poly.from_roots([-1, -1])
    assert p.degree == 2 and p.leading == 1
    assert p(Q(1, 2)) == Q(9, 4)
    q, r = Poly([1, 0, 0, 1]).divmod(Poly([1, 1]))
    assert q == Poly([1, -1, 1]) and r.is_zero()
    assert Poly([0, 0]).is_zero() and Poly([]).degree == -1


def test_exact_division_refuses_remainder():
    with pytest.raises(ArithmeticError):
        Poly([1, 0, 1]).exact_div(Poly([1, 1]))


def test_rising_and_bernstein():
    assert Poly.rising(2, 3) == Poly.from_roots([-2, -3, -4])
    assert Poly.bernstein([1, 5, 5], 2) == Poly([1, 3, 1])


def test_reversal_and_reflection():
    p = Poly([1, 2, 3])
    assert p.reversed() == Poly([3, 2, 1])
    assert p.reversed(4) == Poly([0, 0, 3, 2, 1])
    assert p.reflect() == Poly([1, -2, 3])
    with pytest.raises(ValueError):
        p.reversed(1)


def test_immutable():
    with pytest.raises(AttributeError):
        Poly([1]).coeffs = (2,)


@given(root_lists)
def test_zone_counts_match_sympy(roots):
    p = Poly.from_roots(roots) * Q(7, 3)
    assert sturm_zone_counts(p).to_json() == zone_counts(p.coeffs)


@pytest.mark.parametrize(
    "coeffs",
    [[1, 0, 1], [5, -4, 1, 0, 2], [Q(1, 2), 0, 0, 0, 1], [-1, 0, 0, 1, 0, 1]],
)
def test_zone_counts_with_nonreal_roots(coeffs):
    assert sturm_zone_counts(Poly(coeffs)).to_json() == zone_counts(coeffs)


@given(root_lists)
def test_json_roundtrip(roots):
    p = Poly.from_roots(roots)
    assert Poly.from_json(p.to_json()) == p


@given(root_lists, root_lists)
def test_gcd_of_products(r1, r2):
    common = Poly.from_roots(sorted(set(r1) & set(r2)))
    g = poly_gcd(Poly.from_roots(r1), Poly.from_roots(r2))
    assert Poly.from_roots(r1) % g == Poly() and Poly.from_roots(r2) % g == Poly()
    assert g.degree >= common.degree


@given(root_lists)
def test_squarefree_decomposition_recovers_multiplicities(roots):
    p = Poly.from_roots(roots)
    rebuilt = Poly.constant(1)
    for factor, k in squarefree_decomposition(p):
        rebuilt = rebuilt * factor**k
    assert rebuilt == p.monic()
    assert squarefree_part(p) == Poly.from_roots(set(roots))
    for r in set(roots):
        assert root_multiplicity(p, r) == roots.count(r)


@given(root_lists)
def test_rational_roots_found(roots):
    assert sorted(set(rational_roots(Poly.from_roots(roots) * 6))) == sorted(set(roots))


def test_isolation_and_refinement():
    p = Poly([-2, 0, 1])
    intervals = isolate_real_roots(p)
    assert len(intervals) == 2
    lo, hi = refine_interval(p, max(intervals), Q(1, 1000))
    assert hi - lo <= Q(1, 1000) and lo * lo <= 2 <= hi * hi


def test_sturm_count_half_open():
    chain = SturmChain(Poly.from_roots([0, 1, 2]))
    assert chain.count(0, 1) == 1
    assert chain.count() == 3


@pytest.mark.parametrize(
    "p, q, strict, expected",
    [
        (Poly.from_roots([1, 3]), Poly.from_roots([2]), True, True),
        (Poly.from_roots([1, 3]), Poly.from_roots([4]), False, False),
        (Poly.from_roots([1, 1]), Poly.from_roots([1]), False, True),
        (Poly.from_roots([1, 1]), Poly.from_roots([1]), True, False),
        (Poly.from_roots([1, 1, 1]), Poly.from_roots([1, 2]), False, False),
        (Poly.from_roots([0, 2, 4]), Poly.from_roots([1, 3]), True, True),
        (Poly.from_roots([0, 2, 4]), Poly.from_roots([1, 5]), False, False),
    ],
)
def test_interlacing_cases(p, q, strict, expected):
    assert interlace_check(p, q, strict) is expected


def test_interlacing_requires_real_roots():
    with pytest.raises(NotRealRootedError):
        interlace_check(Poly([1, 0, 1]), Poly([0, 1]))


@given(st.lists(rationals(-4, 4, 3), min_size=2, max_size=6, unique=True))
def test_derivative_interlaces(roots):
    p = Poly.from_roots(roots)
    assert interlace_check(p, p.derivative(), strict=True)


def test_patterns():
    p, q = Poly.from_roots([0, 2]), Poly.from_roots([1])
    assert follows_pattern(p, q, "PQP")
    assert not follows_pattern(p, q, "QPP")
    assert follows_pattern(Poly.from_roots([1]), Poly.from_roots([1]), "QP")


def test_real_rooted_predicate():
    assert is_real_rooted(Poly.from_roots([1, 1, -2]))
    assert not is_real_rooted(Poly([1, 1, 1]))
