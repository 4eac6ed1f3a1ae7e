"""Scaled reduction of LPs with ``b > 0`` and ``c > 0`` to a zero-sum game.

With ``B = diag(1/b)`` and ``C = diag(1/c)`` the payoff matrix is
``M = BAC``, i.e. ``m_ij = a_ij / (b_i c_j)``. The scaled pair

    (P')  max 𝟏ᵀξ  s.t. Mξ ≤ 𝟏, ξ ≥ 0
    (D')  min 𝟏ᵀη  s.t. Mᵀη ≥ 𝟏, η ≥ 0

is equivalent to the original through ``x = Cξ`` and ``y = Bη``, and
is the LP form of the game on ``M``: when the game value ``v`` is
positive, ``(q/v, p/v)`` is optimal for ``(P', D')`` and the LP value is
``1/v``; when ``v ≤ 0`` the column strategy ``q`` is a ray of ``(P')``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .exact_math import (
    DimensionError,
    Mat,
    PreconditionError,
    Vec,
    mat_vec,
    ones,
    scale,
    total,
    zeros,
)
from .games import Game, GameSolution, solve_game, verify_maximin
from .lp import (
    LPInstance,
    LPOutcome,
    OptimalPair,
    UnboundednessCert,
    Verification,
    scalar_check,
    vector_check,
    verify_outcome,
)


@dataclass(frozen=True)
class ScaledLP:
    M: Mat
    A: Mat
    b: Vec
    c: Vec

    @property
    def game(self) -> Game:
        return Game(self.M)

    def reduced_lp(self) -> LPInstance:
        """``(P')`` as an ordinary instance: ``(M, 𝟏, 𝟏)``."""
        return LPInstance(self.M, ones(len(self.b)), ones(len(self.c)))

    def source(self) -> LPInstance:
        return LPInstance(self.A, self.b, self.c)


@dataclass(frozen=True)
class ReducedSolution:
    """Either an optimal pair ``(ξ, η)`` of ``(P', D')`` or a ray ``ξ̄``.

    ``boundary`` marks a ray read off a game of value exactly zero.
    """

    xi: Optional[Vec] = None
    eta: Optional[Vec] = None
    ray: Optional[Vec] = None
    boundary: bool = False

    @classmethod
    def primal_dual(cls, xi: Vec, eta: Vec) -> "ReducedSolution":
        return cls(xi=tuple(xi), eta=tuple(eta))

    @classmethod
    def unbounded(cls, ray: Vec, boundary: bool = False) -> "ReducedSolution":
        return cls(ray=tuple(ray), boundary=boundary)

    @property
    def kind(self) -> str:
        return "unbounded" if self.ray is not None else "primal_dual"

    def objective(self) -> Fraction:
        return total(self.xi if self.ray is None else self.ray)

    def as_outcome(self) -> LPOutcome:
        if self.ray is not None:
            return UnboundednessCert(self.ray, zeros(len(self.ray)))
        obj = total(self.xi)
        return OptimalPair(self.xi, self.eta, obj)


@dataclass(frozen=True)
class NonpositiveValue:
    """Evidence that the game value is at most zero: ``(q, 0)`` is feasible for the column LP."""

    q: Vec
    v: Fraction = Fraction(0)
    report: Verification = Verification(())


def _require_positive(b: Vec, c: Vec) -> None:
    for i, bi in enumerate(b):
        if bi <= 0:
            raise PreconditionError(f"b[{i}] = {bi} is not positive")
    for j, cj in enumerate(c):
        if cj <= 0:
            raise PreconditionError(f"c[{j}] = {cj} is not positive")


def scale_lp(lp: LPInstance) -> ScaledLP:
    _require_positive(lp.b, lp.c)
    M = tuple(tuple(a / (bi * cj) for a, cj in zip(row, lp.c)) for row, bi in zip(lp.A, lp.b))
    return ScaledLP(M, lp.A, lp.b, lp.c)


def lift_primal(s: ScaledLP, xi: Vec) -> Vec:
    """``x = Cξ``."""
    if len(xi) != len(s.c):
        raise DimensionError(f"xi has {len(xi)} entries, expected {len(s.c)}")
    return tuple(v / cj for v, cj in zip(xi, s.c))


def lift_dual(s: ScaledLP, eta: Vec) -> Vec:
    """``y = Bη``."""
    if len(eta) != len(s.b):
        raise DimensionError(f"eta has {len(eta)} entries, expected {len(s.b)}")
    return tuple(v / bi for v, bi in zip(eta, s.b))


def verify_reduced(s: ScaledLP, r: ReducedSolution) -> Verification:
    """Check ``r`` against ``(P', D')``; an optimal pair must share its objective."""
    return verify_outcome(s.reduced_lp(), r.as_outcome())


def game_to_reduced(s: ScaledLP, sol: GameSolution) -> ReducedSolution:
    report = verify_maximin(s.game, sol)
    if not report:
        raise ValueError(f"not a maximin pair for M: {[c.detail for c in report.violations]}")
    v = sol.value
    if v > 0:
        return ReducedSolution.primal_dual(scale(1 / v, sol.q.probs), scale(1 / v, sol.p.probs))
    return ReducedSolution.unbounded(sol.q.probs, boundary=(v == 0))


def reduced_to_game(s: ScaledLP, r: ReducedSolution) -> Union[GameSolution, NonpositiveValue]:
    report = verify_reduced(s, r)
    if not report:
        raise ValueError(f"not a solution of the scaled pair: {[c.label for c in report.violations]}")
    if r.ray is None:
        v = 1 / total(r.xi)
        sol = GameSolution(v, scale(v, r.eta), scale(v, r.xi))
        assert verify_maximin(s.game, sol)
        return sol
    q = scale(1 / total(r.ray), r.ray)
    evidence = verify_maximin_column(s.game, q, Fraction(0))
    return NonpositiveValue(q, Fraction(0), evidence)


def verify_maximin_column(g: Game, q: Vec, v: Fraction) -> Verification:
    """Feasibility of ``(q, v)`` for the column player's program."""
    m, _ = g.shape
    return Verification((
        vector_check("q >= 0", q, ">=", zeros(len(q))),
        scalar_check("1^T q == 1", total(q), "==", Fraction(1)),
        vector_check("M q <= v", mat_vec(g.M, q), "<=", scale(v, ones(m))),
    ))


def solve_positive_lp(lp: LPInstance) -> LPOutcome:
    """Solve an LP with ``b > 0, c > 0`` through the game on ``BAC``.

    Never reports infeasibility: ``x = 0`` is always feasible here.
    """
    try:
        s = scale_lp(lp)
    except PreconditionError as exc:
        raise PreconditionError(
            f"{exc}; the scaled reduction needs b > 0 and c > 0. "
            "Use nonneg.solve_nonneg_lp for A >= 0 or lp.solve_lp in general"
        ) from None
    r = game_to_reduced(s, solve_game(s.game))
    if r.ray is not None:
        out: LPOutcome = UnboundednessCert(lift_primal(s, r.ray), zeros(lp.n))
    else:
        x = lift_primal(s, r.xi)
        y = lift_dual(s, r.eta)
        out = OptimalPair(x, y, total(r.xi))
    report = verify_outcome(lp, out)
    if not report:
        raise AssertionError(f"internal error: lifted outcome fails {report.violations}")
    return out


def degree_of_feasibility(s: ScaledLP) -> Fraction:
    """Value of the game on ``M``.

    Positive: ``(D')`` is feasible and the value is ``1/opt(P')``.
    Zero or negative: ``(D')`` is infeasible; the magnitude is the least
    slack ``v`` for which ``Mq ≤ v𝟏`` has a probability vector ``q``.
    """
    return solve_game(s.game).value


def interpret_degree(value: Fraction) -> str:
    if value > 0:
        return f"scaled dual feasible; LP value = {1 / value}"
    if value == 0:
        return "boundary: scaled dual infeasible, primal unbounded, zero slack"
    return f"scaled dual infeasible; degree of infeasibility {value}"
