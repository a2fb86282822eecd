"""Exact constructions of f-Eulerian, d-Narayana and Jacobi-Pineiro polynomials."""

from .exactmath import Rational, FormalSeries, PoleError, pochhammer, terminating_hypergeometric
from .polyalgebra import Poly, ZoneCounts, sturm_zone_counts, interlace_check
from .feulerian import EulerianSpec, hatw_direct, hatw_recursive, classify_zeros
from .millerparis import MPParams, first_mp_char_poly, second_mp_char_poly
from .narayana import narayana_sulanke, ballot_path_oracle
from .jacobipineiro import JPParams, jp_polynomial

__all__ = [
    "Rational",
    "FormalSeries",
    "PoleError",
    "pochhammer",
    "terminating_hypergeometric",
    "Poly",
    "ZoneCounts",
    "sturm_zone_counts",
    "interlace_check",
    "EulerianSpec",
    "hatw_direct",
    "hatw_recursive",
    "classify_zeros",
    "MPParams",
    "first_mp_char_poly",
    "second_mp_char_poly",
    "narayana_sulanke",
    "ballot_path_oracle",
    "JPParams",
    "jp_polynomial",
]
