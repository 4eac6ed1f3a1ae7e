from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from minimax_lp.brute_force import brute_force_lp
from minimax_lp.dantzig import (
    DantzigStrategy,
    Hole,
    dantzig_matrix,
    extract_classic,
    extract_positive,
    solve_dantzig_strategy,
    solve_via_dantzig,
    verify_dantzig_strategy,
)
from minimax_lp.exact_math import PreconditionError, dot, mat, mat_vec, total, transpose, unit, zeros
from minimax_lp.games import solve_game
from minimax_lp.lp import (
    InfeasibilityCert,
    LPInstance,
    OptimalPair,
    UnboundednessCert,
    outcome_value,
    verify_outcome,
)
from minimax_lp.reduction import solve_positive_lp

from conftest import SKEW_UNBOUNDED, SKEW_MATRIX, SKEW_STRATEGY, ZERO_DATA, lp_instances

positive_lps = lp_instances(max_m=3, max_n=3, entries=st.integers(-3, 3),
                            b_entries=st.integers(1, 3), c_entries=st.integers(1, 3))


def test_skew_matrix_golden():
    assert dantzig_matrix(SKEW_UNBOUNDED).K == mat(SKEW_MATRIX)


def test_zero_instance_matrix():
    assert dantzig_matrix(LPInstance([[0]], [0], [0])).K == mat([[0] * 3] * 3)


def test_matrix_is_skew_symmetric():
    K = dantzig_matrix(LPInstance([[1, 2, 3], [4, 5, 6]], [7, 8], [9, 10, 11])).K
    assert K == tuple(tuple(-a for a in row) for row in transpose(K))


def test_strategy_validation():
    with pytest.raises(ValueError):
        DantzigStrategy((F(1, 2),), (F(1, 3),), F(0))
    with pytest.raises(ValueError):
        DantzigStrategy((F(-1),), (F(1),), F(1))
    with pytest.raises(ValueError):
        DantzigStrategy.split(SKEW_UNBOUNDED, (1, 0, 0))


def test_positive_extraction_golden():
    s = DantzigStrategy.split(SKEW_UNBOUNDED, SKEW_STRATEGY)
    assert verify_dantzig_strategy(SKEW_UNBOUNDED, s)
    out = extract_positive(SKEW_UNBOUNDED, s)
    assert out == UnboundednessCert((F(1, 6), F(1, 3)), (0, 0))
    assert verify_outcome(SKEW_UNBOUNDED, out)


def test_classic_extraction_hole_on_golden():
    # t = 0 and b.p = c.q = 1/2: the classic rule has nothing to say
    s = DantzigStrategy.split(SKEW_UNBOUNDED, SKEW_STRATEGY)
    assert s.t == 0 and s.gap(SKEW_UNBOUNDED) == 0
    assert isinstance(extract_classic(SKEW_UNBOUNDED, s), Hole)


@pytest.mark.parametrize("A", [[[1, 2], [3, 0]], [[0]], [[2, 1, 0]], [[1], [1], [4]]])
def test_zero_data_hole(A):
    m, n = len(A), len(A[0])
    lp = LPInstance(A, zeros(m), zeros(n))
    s = DantzigStrategy(unit(m, 0), zeros(n), F(0))
    out = extract_classic(lp, s)
    assert isinstance(out, Hole) and out.strategy == s


def test_zero_data_solver_reports_hole():
    assert isinstance(solve_via_dantzig(ZERO_DATA), Hole)


def test_classic_optimal():
    lp = LPInstance([[1]], [2], [3])
    out = solve_via_dantzig(lp)
    assert out == OptimalPair((2,), (3,), 6) == brute_force_lp(lp)


def test_classic_negative_gap_infeasible():
    lp = LPInstance([[1]], [-1], [1])
    s = solve_dantzig_strategy(lp)
    assert s.t == 0 and s.gap(lp) < 0
    out = extract_classic(lp, s)
    assert out == InfeasibilityCert((1,))
    assert isinstance(brute_force_lp(lp), InfeasibilityCert)


def test_classic_negative_gap_unbounded():
    lp = LPInstance([[-1]], [1], [1])
    out = solve_via_dantzig(lp)
    assert isinstance(out, UnboundednessCert) and verify_outcome(lp, out)


def test_extract_rejects_non_maximin():
    lp = LPInstance([[1]], [2], [3])
    bad = DantzigStrategy((F(1),), (F(0),), F(0))
    with pytest.raises(ValueError):
        extract_classic(lp, bad)


def test_extract_positive_precondition():
    with pytest.raises(PreconditionError):
        extract_positive(ZERO_DATA, DantzigStrategy(unit(2, 0), zeros(2), F(0)))


def test_extract_positive_one_dim():
    lp = LPInstance([[1]], [2], [3])
    assert extract_positive(lp, solve_dantzig_strategy(lp)) == OptimalPair((2,), (3,), 6)


def _conditions(lp, s):
    Aq = mat_vec(lp.A, s.q)
    Atp = mat_vec(transpose(lp.A), s.p)
    gap = s.gap(lp)
    return [
        all(a - b * s.t <= 0 for a, b in zip(Aq, lp.b)),
        all(-a + c * s.t <= 0 for a, c in zip(Atp, lp.c)),
        gap <= 0,
        total(s.p) + total(s.q) + s.t == 1,
        all(v >= 0 for v in s.p + s.q) and s.t >= 0,
        s.t * gap == 0,
    ]


@settings(max_examples=120, deadline=None)
@given(lp_instances(max_m=3, max_n=3))
def test_skew_game_value_and_conditions(lp):
    g = dantzig_matrix(lp).game
    assert solve_game(g).value == 0
    s = solve_dantzig_strategy(lp)
    assert verify_dantzig_strategy(lp, s)
    assert all(_conditions(lp, s))
    out = extract_classic(lp, s)
    if not isinstance(out, Hole):
        assert verify_outcome(lp, out)
        assert out.kind == brute_force_lp(lp).kind


@settings(max_examples=120, deadline=None)
@given(positive_lps)
def test_positive_extraction_agrees_with_reduction(lp):
    s = solve_dantzig_strategy(lp)
    if s.t == 0:
        assert any(v != 0 for v in s.q)
    out = extract_positive(lp, s)
    assert not isinstance(out, Hole)
    assert verify_outcome(lp, out)
    other = solve_positive_lp(lp)
    assert out.kind == other.kind and outcome_value(out) == outcome_value(other)
    if isinstance(out, OptimalPair):
        assert dot(lp.c, out.x) == out.value
