from fractions import Fraction
from math import factorial

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import non_integer_rationals, rationals
from eulerpoly.exactmath import DivergentSeriesError, PoleError
from eulerpoly.feulerian import EulerianSpec, hatw_direct
from eulerpoly.millerparis import (
    GuardError,
    MPParams,
    bernstein_expansion,
    block_poly,
    connection_whF_whR,
    first_mp_char_poly,
    gasper_identity_check,
    gasper_sides,
    monomial_expansion,
    mp_operator,
    second_mp_char_poly,
    terminating_sum_check,
    verify_first_mp,
    verify_second_mp,
)
from eulerpoly.narayana import narayana_sulanke
from eulerpoly.polyalgebra import Poly
from oracles import poch

Q = Fraction


def narayana_params(d, m):
    return MPParams(m + d, m + 1, 2, tuple(range(3, d + 1)), (m - 1,) * (d - 2))


def gauss_coeffs(a, b, c, order):
    return [poch(a, n) * poch(b, n) / (poch(c, n) * factorial(n)) for n in range(order + 1)]


def binom_coeffs(s, order):
    return [poch(s, n) / factorial(n) for n in range(order + 1)]


def cauchy(u, v):
    return [sum(u[i] * v[n - i] for i in range(n + 1)) for n in range(len(u))]


def test_trivial_block_gives_constant_char_poly():
    assert first_mp_char_poly(Q(1, 3), Q(5, 2), [], []) == Poly([1])
    assert second_mp_char_poly(MPParams(Q(1, 2), Q(1, 3), Q(5, 2))) == Poly([1])


@pytest.mark.parametrize(
    "delta, eps, rho", [(Q(1, 2), Q(1, 3), Q(5, 2)), (Q(-3, 4), Q(2, 3), Q(7, 5)), (3, Q(1, 7), Q(9, 2))]
)
def test_euler_transformation_oracle(delta, eps, rho):
    order = 12
    p = MPParams(delta, eps, rho)
    assert verify_first_mp(p, order) and verify_second_mp(p, order)
    # classical Euler transformation computed independently
    lhs = gauss_coeffs(delta, eps, rho, order)
    rhs = cauchy(binom_coeffs(delta + eps - rho, order), gauss_coeffs(rho - delta, rho - eps, rho, order))
    assert lhs == rhs


@pytest.mark.parametrize(
    "params, order",
    [
        (MPParams(Q(1, 2), Q(1, 3), Q(5, 2), (Q(3, 2),), (1,)), 12),
        (MPParams(Q(1, 2), Q(3, 4), Q(7, 3), (Q(5, 4),), (2,)), 14),
        (narayana_params(3, 2), 14),
        (narayana_params(4, 3), 16),
    ],
)
def test_transformations_hold(params, order):
    assert verify_first_mp(params, order)
    assert verify_second_mp(params, order)


def test_char_poly_routes_agree():
    p = MPParams(Q(1, 2), Q(3, 4), Q(7, 3), (Q(5, 4), Q(2, 3)), (2, 1))
    assert first_mp_char_poly(p.epsilon, p.rho, p.nu, p.omega_vec) == mp_operator(
        p.block(), p.epsilon, p.rho, p.omega
    )
    assert first_mp_char_poly(p.epsilon, p.rho, p.nu, p.omega_vec).degree <= p.omega


mp_params = st.builds(
    lambda d, e, rho, nu: MPParams(d, e, rho, tuple(n for n, _ in nu), tuple(w for _, w in nu)),
    rationals(-3, 3, 5),
    rationals(-3, 3, 5),
    non_integer_rationals(-3, 5, 5),
    st.lists(st.tuples(non_integer_rationals(-3, 4, 4), st.integers(1, 2)), max_size=2),
)


@given(mp_params)
def test_random_transformations(params):
    try:
        params.check_second()
    except GuardError:
        assume(False)
    assert verify_first_mp(params)
    assert verify_second_mp(params)
    # the second operator is symmetric in delta and epsilon
    assert second_mp_char_poly(params) == second_mp_char_poly(params.swapped())


def test_guards():
    with pytest.raises(GuardError):
        MPParams(1, 1, -2)
    with pytest.raises(GuardError):
        MPParams(1, 1, Q(1, 2), (-1,), (2,))
    with pytest.raises(GuardError):
        MPParams(1, 2, 3, (Q(1, 2),), (1,)).check_first()


def test_narayana_degree_drop():
    d, m = 3, 2
    L = (d - 2) * (m - 1)
    p = first_mp_char_poly(m + 1, 2, list(range(3, d + 1)), [m - 1] * (d - 2))
    assert p.degree <= L


@pytest.mark.parametrize(
    "a, blocks",
    [
        (5, [(2, 1), (3, 1)]),
        (Q(1, 2), [(Q(1, 3), 2), (Q(5, 2), 1)]),
        (Q(-1, 4), [(Q(2, 3), 2), (Q(7, 4), 2)]),
        (Q(7, 2), [(Q(1, 5), 1), (Q(9, 4), 1), (Q(-5, 2), 1)]),
    ],
)
def test_expansions_recover_hatw(a, blocks):
    spec = EulerianSpec(a, blocks)
    target = hatw_direct(spec)
    usable = 0
    for pivot in range(spec.r):
        assert Poly.bernstein(bernstein_expansion(spec, pivot), spec.m) == target
        try:
            expanded = monomial_expansion(spec, pivot)
        except GuardError:
            continue
        usable += 1
        assert expanded == target
    assert usable >= 1
    assert connection_whF_whR(spec, order=spec.m + 6)


def test_narayana_expansions():
    spec = EulerianSpec(5, [(2, 1), (3, 1)])
    assert monomial_expansion(spec) == narayana_sulanke(3, 2)
    spec = EulerianSpec(5, [(2, 2)])
    assert bernstein_expansion(spec) == [1, 5, 5]
    assert bernstein_expansion(EulerianSpec(3)) == [1]


@given(
    rationals(-4, 4, 4),
    st.lists(st.tuples(non_integer_rationals(-3, 4, 4), st.integers(1, 2)), min_size=1, max_size=2),
)
def test_random_expansions(a, blocks):
    spec = EulerianSpec(a, blocks)
    target = hatw_direct(spec)
    try:
        assert monomial_expansion(spec) == target
    except (GuardError, PoleError):
        pass
    assert Poly.bernstein(bernstein_expansion(spec), spec.m) == target
    try:
        assert connection_whF_whR(spec)
    except GuardError:
        pass


def test_block_poly_normalized():
    p = block_poly([2, 3], [1, 2])
    assert p(0) == 1
    assert p == Poly.rising(2, 1) * Poly.rising(3, 2) / 24


@pytest.mark.parametrize(
    "n, b, c, f, m_vec",
    [
        (0, 0, 5, [Q(1, 2)], [1]),
        (2, 1, 7, [Q(1, 2)], [1]),
        (3, 2, 9, [Q(1, 3), Q(5, 2)], [1, 2]),
        (1, 3, 12, [Q(7, 3)], [2]),
    ],
)
def test_gasper_identity(n, b, c, f, m_vec):
    lhs, rhs = gasper_sides(n, b, c, f, m_vec)
    assert lhs == rhs
    assert gasper_identity_check(n, b, c, f, m_vec)


def test_gasper_indeterminate_right_side():
    with pytest.raises(PoleError):
        gasper_sides(1, 2, 9, [2], [1])


def test_gasper_needs_a_terminating_right_side():
    with pytest.raises(DivergentSeriesError):
        gasper_sides(3, 2, Q(19, 2), [Q(1, 3), Q(5, 2)], [1, 2])


def test_gasper_validation():
    with pytest.raises(ValueError):
        gasper_sides(1, Q(1, 2), 9, [Q(1, 3)], [1])
    with pytest.raises(ValueError):
        gasper_sides(1, 1, 1, [Q(1, 3)], [1])


@pytest.mark.parametrize("k", range(0, 5))
def test_terminating_sum(k):
    assert terminating_sum_check(k, [2, 3], [1, 1])
    assert terminating_sum_check(k, [Q(1, 3), Q(5, 2), Q(7, 4)], [2, 1, 1])


@pytest.mark.parametrize("k", range(0, 5))
def test_terminating_sum_narayana(k):
    assert terminating_sum_check(k, [2, 3], [1, 1])
    assert terminating_sum_check(k, [2, 3, 4], [2, 2, 2])
