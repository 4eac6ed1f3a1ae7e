import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from minimax_lp.lp import LPInstance

F = Fraction

SKEW_UNBOUNDED = LPInstance([[-1, F(1, 2)], [1, F(-1, 2)]], [1, 1], [1, 1])
SKEW_STRATEGY = (F(1, 4), F(1, 4), F(1, 6), F(1, 3), F(0))
SKEW_MATRIX = (
    (0, 0, -1, F(1, 2), -1),
    (0, 0, 1, F(-1, 2), -1),
    (1, -1, 0, 0, 1),
    (F(-1, 2), F(1, 2), 0, 0, 1),
    (1, 1, -1, -1, 0),
)
ZERO_DATA = LPInstance([[1, 2], [3, 0]], [0, 0], [0, 0])


def random_lp(rng, m, n, lo, hi, b_range=None, c_range=None, a_values=None):
    if a_values is None:
        A = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]
    else:
        A = [[rng.choice(a_values) for _ in range(n)] for _ in range(m)]
    b = [rng.randint(*(b_range or (lo, hi))) for _ in range(m)]
    c = [rng.randint(*(c_range or (lo, hi))) for _ in range(n)]
    return LPInstance(A, b, c)


def small_lps(seed, count, max_total=8, lo=-2, hi=2):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        m = rng.randint(1, max_total - 1)
        n = rng.randint(1, max_total - m)
        out.append(random_lp(rng, m, n, lo, hi))
    return out


@pytest.fixture
def rng():
    return random.Random(20240601)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
small_ints = st.integers(min_value=-2, max_value=2)


@st.composite
def lp_instances(draw, max_m=3, max_n=3, entries=small_ints, b_entries=None, c_entries=None):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    A = draw(st.lists(st.lists(entries, min_size=n, max_size=n), min_size=m, max_size=m))
    b = draw(st.lists(entries if b_entries is None else b_entries, min_size=m, max_size=m))
    c = draw(st.lists(entries if c_entries is None else c_entries, min_size=n, max_size=n))
    return LPInstance(A, b, c)


@st.composite
def matrices(draw, max_m=4, max_n=4, entries=small_ints):
    m = draw(st.integers(1, max_m))
    n = draw(st.integers(1, max_n))
    return draw(st.lists(st.lists(entries, min_size=n, max_size=n), min_size=m, max_size=m))
