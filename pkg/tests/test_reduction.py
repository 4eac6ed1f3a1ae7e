import re
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from minimax_lp.assignment import AssignmentInstance, assignment_lp, hide_and_seek
from minimax_lp.brute_force import brute_force_lp
from minimax_lp.exact_math import DimensionError, PreconditionError, mat, mat_vec
from minimax_lp.games import GameSolution, solve_game, verify_maximin
from minimax_lp.lp import (
    LPInstance,
    OptimalPair,
    UnboundednessCert,
    dual_feasibility,
    primal_feasibility,
    ray_checks,
    verify_outcome,
)
from minimax_lp.reduction import (
    NonpositiveValue,
    ReducedSolution,
    degree_of_feasibility,
    game_to_reduced,
    interpret_degree,
    lift_dual,
    lift_primal,
    reduced_to_game,
    scale_lp,
    solve_positive_lp,
)

from conftest import lp_instances

ONE_DIM = LPInstance([[1]], [2], [3])
NEG = LPInstance([[-1]], [1], [1])
positive_lps = lp_instances(max_m=4, max_n=4, entries=st.integers(-3, 3),
                            b_entries=st.integers(1, 3), c_entries=st.integers(1, 3))
nonneg_points = st.integers(0, 4).map(F)


def test_scale_examples():
    assert scale_lp(ONE_DIM).M == ((F(1, 6),),)
    assert scale_lp(LPInstance([[1, 2], [3, 1]], [1, 2], [1, 1])).M == mat([[1, 2], [F(3, 2), F(1, 2)]])


def test_scale_of_assignment_is_hide_and_seek():
    a = AssignmentInstance([[2, 1], [1, 3]])
    assert scale_lp(assignment_lp(a)).M == hide_and_seek(a).M


@pytest.mark.parametrize("b,c,index", [((0,), (1,), "b[0]"), ((1,), (-2,), "c[0]")])
def test_scale_precondition_names_index(b, c, index):
    with pytest.raises(PreconditionError, match=re.escape(index)):
        scale_lp(LPInstance([[1]], b, c))


def test_lift_examples():
    s = scale_lp(ONE_DIM)
    assert lift_primal(s, (6,)) == (2,)
    assert lift_primal(s, (0,)) == (0,)
    assert lift_dual(s, (6,)) == (3,)
    assert lift_dual(s, (0,)) == (0,)
    with pytest.raises(DimensionError):
        lift_primal(s, (1, 2))
    with pytest.raises(DimensionError):
        lift_dual(s, (1, 2))


def test_lift_dual_identity_for_unit_b():
    s = scale_lp(assignment_lp(AssignmentInstance([[2, 1], [1, 2]])))
    eta = (F(1), F(2), F(3), F(4))
    assert lift_dual(s, eta) == eta


def test_game_to_reduced_examples():
    s = scale_lp(ONE_DIM)
    r = game_to_reduced(s, GameSolution(F(1, 6), [1], [1]))
    assert (r.xi, r.eta, r.kind) == ((6,), (6,), "primal_dual")
    s = scale_lp(NEG)
    r = game_to_reduced(s, GameSolution(-1, [1], [1]))
    assert r.ray == (1,) and not r.boundary


def test_game_to_reduced_zero_value_is_boundary_ray():
    s = scale_lp(LPInstance([[0]], [1], [1]))
    r = game_to_reduced(s, solve_game(s.game))
    assert r.kind == "unbounded" and r.boundary


def test_game_to_reduced_rejects_unverified():
    with pytest.raises(ValueError):
        game_to_reduced(scale_lp(ONE_DIM), GameSolution(1, [1], [1]))


def test_reduced_to_game_examples():
    s = scale_lp(ONE_DIM)
    sol = reduced_to_game(s, ReducedSolution.primal_dual((6,), (6,)))
    assert sol == GameSolution(F(1, 6), [1], [1])

    a = AssignmentInstance([[2, 1], [1, 2]])
    s = scale_lp(assignment_lp(a))
    sol = reduced_to_game(s, ReducedSolution.primal_dual((2, 0, 0, 2), (1, 1, 1, 1)))
    assert sol.value == F(1, 4)
    assert sol.q.probs == (F(1, 2), 0, 0, F(1, 2))

    s = scale_lp(NEG)
    rep = reduced_to_game(s, ReducedSolution.unbounded((1,)))
    assert isinstance(rep, NonpositiveValue) and rep.report and rep.q == (1,)


def test_reduced_to_game_rejects_invalid():
    with pytest.raises(ValueError):
        reduced_to_game(scale_lp(ONE_DIM), ReducedSolution.primal_dual((7,), (6,)))


@pytest.mark.parametrize("lp,expected", [
    (ONE_DIM, OptimalPair((2,), (3,), 6)),
    (NEG, UnboundednessCert((1,), (0,))),
])
def test_solve_positive_examples(lp, expected):
    assert solve_positive_lp(lp) == expected


def test_solve_positive_value_two():
    lp = LPInstance([[1, 0], [0, 2]], [1, 2], [1, 1])
    out = solve_positive_lp(lp)
    assert isinstance(out, OptimalPair) and out.value == 2 == brute_force_lp(lp).value


def test_solve_positive_precondition_points_elsewhere():
    with pytest.raises(PreconditionError, match="solve_nonneg_lp"):
        solve_positive_lp(LPInstance([[1]], [0], [1]))


@pytest.mark.parametrize("M,expected", [([[F(1, 6)]], F(1, 6)), ([[-1]], -1), ([[0]], 0)])
def test_degree_of_feasibility(M, expected):
    s = scale_lp(LPInstance(M, [1], [1]))
    assert degree_of_feasibility(s) == expected


def test_interpret_degree():
    assert "LP value = 6" in interpret_degree(F(1, 6))
    assert "boundary" in interpret_degree(F(0))
    assert "-1" in interpret_degree(F(-1))


@settings(max_examples=150, deadline=None)
@given(positive_lps, st.data())
def test_scaling_feasibility_equivalence(lp, data):
    s = scale_lp(lp)
    reduced = s.reduced_lp()
    xi = tuple(data.draw(st.lists(nonneg_points, min_size=lp.n, max_size=lp.n)))
    eta = tuple(data.draw(st.lists(nonneg_points, min_size=lp.m, max_size=lp.m)))
    assert bool(primal_feasibility(reduced, xi)) == bool(primal_feasibility(lp, lift_primal(s, xi)))
    assert bool(dual_feasibility(reduced, eta)) == bool(dual_feasibility(lp, lift_dual(s, eta)))
    assert bool(ray_checks(reduced, xi)) == bool(ray_checks(lp, lift_primal(s, xi)))


@settings(max_examples=100, deadline=None)
@given(positive_lps)
def test_value_reciprocity(lp):
    out = solve_positive_lp(lp)
    assert verify_outcome(lp, out)
    v = degree_of_feasibility(scale_lp(lp))
    if isinstance(out, OptimalPair):
        assert out.value > 0 and v == 1 / out.value
    else:
        assert v <= 0 and out.feasible_witness == (0,) * lp.n


@settings(max_examples=100, deadline=None)
@given(positive_lps)
def test_round_trips(lp):
    s = scale_lp(lp)
    sol = solve_game(s.game)
    r = game_to_reduced(s, sol)
    back = reduced_to_game(s, r)
    if isinstance(back, GameSolution):
        assert back.value == sol.value
        assert verify_maximin(s.game, back)
        assert game_to_reduced(s, back).objective() == r.objective()
    else:
        assert sol.value <= 0 and back.report
        assert all(x <= 0 for x in mat_vec(s.M, back.q))
        assert sum(back.q) == 1 and back.v == 0
