from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "exact", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("exact")


def rationals(lo: int = -6, hi: int = 6, max_den: int = 6):
    return st.builds(
        lambda num, den: Fraction(num, den),
        st.integers(lo * max_den, hi * max_den),
        st.integers(1, max_den),
    ).filter(lambda q: lo <= q <= hi)


def non_integer_rationals(lo: int = -6, hi: int = 6, max_den: int = 6):
    return rationals(lo, hi, max_den).filter(lambda q: q.denominator != 1)
