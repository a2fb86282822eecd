from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerpoly.narayana import (
    VARIANTS,
    NarayanaParams,
    all_routes,
    ballot_path_oracle,
    catalan_multidim,
    coefficient_pair,
    hankel_hoggatt_check,
    hat_q_composition,
    hat_q_direct,
    hoggatt_binomial,
    narayana_bernstein,
    narayana_explicit,
    narayana_sulanke,
    narayana_via_feulerian,
    negative_zero_check,
    palindrome_check,
    q_reflection_symmetry_check,
    r_reduced,
    reconstruct_bernstein,
)
from eulerpoly.polyalgebra import Poly, sturm_zone_counts
from oracles import catalan, narayana_by_descents

Q = Fraction
GRID = [(d, m) for d in range(2, 5) for m in range(1, 5)] + [(2, 5), (2, 6), (5, 2)]


@pytest.mark.parametrize("d, m", [(2, 3), (3, 2)])
def test_five_paths(d, m):
    assert ballot_path_oracle(d, m) == Poly([1, 3, 1])
    assert narayana_sulanke(d, m) == Poly([1, 3, 1])
    assert narayana_explicit(d, m) == Poly([1, 3, 1])


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_single_step_paths(d):
    assert ballot_path_oracle(d, 1) == Poly([1])
    assert narayana_sulanke(d, 1) == Poly([1])
    assert catalan_multidim(d, 1) == 1


@pytest.mark.parametrize("d, m", GRID)
def test_routes_match_descent_enumeration(d, m):
    expected = Poly(narayana_by_descents(d, m))
    for name, poly in all_routes(d, m).items():
        assert poly == expected, name
    assert expected.degree == NarayanaParams(d, m).K


@pytest.mark.parametrize("d, m", GRID)
def test_catalan_value(d, m):
    assert narayana_sulanke(d, m)(1) == catalan_multidim(d, m)
    assert catalan_multidim(d, m) == catalan_multidim(m, d)


def test_catalan_column():
    assert [catalan_multidim(2, m) for m in range(1, 6)] == [1, 2, 5, 14, 42]
    assert all(catalan_multidim(2, m) == catalan(m) for m in range(1, 10))
    assert catalan_multidim(2, 3) == catalan_multidim(3, 2) == 5


@pytest.mark.parametrize("m", range(1, 7))
def test_classical_narayana(m):
    # d = 2: N(m, k) = C(m, k) C(m, k+1) / m
    want = Poly([Q(comb(m, k) * comb(m, k + 1), m) for k in range(m)])
    assert narayana_sulanke(2, m) == want
    assert narayana_explicit(2, m) == want


def test_hoggatt_binomials():
    assert hoggatt_binomial(3, 2, 0) == 1
    assert hoggatt_binomial(2, 2, 1) == 6
    for m in range(4):
        for j in range(5):
            assert hoggatt_binomial(1, m, j) == comb(m + j, m)


@pytest.mark.parametrize("d, k, m", [(1, 4, 2), (2, 3, 1), (2, 5, 3), (3, 6, 2), (3, 8, 4), (4, 5, 2)])
def test_hankel_hoggatt(d, k, m):
    assert hankel_hoggatt_check(d, k, m)


@pytest.mark.parametrize("d, m", [(d, m) for d in range(2, 5) for m in range(1, 5)])
def test_hat_q_routes_agree(d, m):
    assert hat_q_direct(d, m) == hat_q_composition(d, m)
    assert hat_q_composition(d, m).degree <= NarayanaParams(d, m).L


def test_literal_top_parameter_disagrees():
    # (-M-3)_j instead of (-K-2)_j breaks agreement with the composition
    d, m = 3, 3
    p = NarayanaParams(d, m)
    assert hat_q_direct(d, m, top_shift=-p.M - 3) != hat_q_composition(d, m)
    assert hat_q_direct(d, m, top_shift=-p.K - 2) == hat_q_composition(d, m)


def test_bernstein_examples():
    assert narayana_bernstein(2, 3, "K-basis") == [1, 5, 5]
    for v in VARIANTS:
        assert reconstruct_bernstein(3, 2, v) == Poly([1, 3, 1])
    with pytest.raises(ValueError):
        narayana_bernstein(3, 2, "bogus")


@pytest.mark.parametrize("d, m", [(3, 2), (3, 3), (4, 2), (4, 3), (4, 4), (5, 2)])
def test_reduced_polynomial_degree(d, m):
    assert r_reduced(d, m).degree == NarayanaParams(d, m).L - 1


@pytest.mark.parametrize("d, m", GRID)
def test_palindromic_and_negative(d, m):
    assert palindrome_check(d, m, with_gasper=d <= 4 and m <= 4)
    assert negative_zero_check(d, m)
    z = sturm_zone_counts(narayana_via_feulerian(d, m))
    assert z.neg == NarayanaParams(d, m).K


@pytest.mark.parametrize("d, m", [(2, 3), (3, 3), (4, 2)])
def test_coefficient_pairs(d, m):
    poly = narayana_sulanke(d, m)
    K = NarayanaParams(d, m).K
    for n in range(K + 1):
        left, right = coefficient_pair(d, m, n)
        assert left == right == poly.coeff(n)


@pytest.mark.parametrize("d, m", [(2, 1), (2, 4), (3, 2), (4, 3), (5, 4)])
def test_q_reflection_symmetry(d, m):
    assert q_reflection_symmetry_check(d, m)


def test_q_reflection_symmetry_precondition():
    with pytest.raises(ValueError):
        q_reflection_symmetry_check(5, 2)


def test_parameter_validation():
    with pytest.raises(ValueError):
        NarayanaParams(1, 3)
    with pytest.raises(ValueError):
        narayana_sulanke(2, 0)


@given(st.integers(2, 6), st.integers(1, 6))
def test_sulanke_and_feulerian_agree(d, m):
    assert narayana_sulanke(d, m) == narayana_via_feulerian(d, m)
