"""The classic skew-symmetric reduction of an LP to a symmetric game.

For ``(A, b, c)`` with ``A`` of size ``m×n`` the game matrix is

    [[ 0,   A, -b],
     [-Aᵀ,  0,  c],
     [ bᵀ, -cᵀ, 0]]

Its value is 0. A minimax strategy ``(p, q, t)`` of the column player
satisfies ``Kq ≤ 0`` blockwise, which is what the extraction routines
rely on. The classic extraction leaves a gap when ``t = 0`` and
``bᵀp = cᵀq``; :func:`extract_classic` reports that case as a
:class:`Hole` instead of guessing. With ``b, c > 0`` the gap closes:
``t = 0`` alone already makes ``q`` an unboundedness certificate.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact_math import Mat, PreconditionError, Vec, dot, scale, total, zeros
from .games import Game, GameSolution, solve_game, verify_maximin
from .lp import (
    InfeasibilityCert,
    LPInstance,
    LPOutcome,
    OptimalPair,
    UnboundednessCert,
    Verification,
    farkas_checks,
    ray_checks,
    verify_outcome,
)


@dataclass(frozen=True)
class DantzigGame:
    K: Mat
    source: LPInstance

    @property
    def game(self) -> Game:
        return Game(self.K)


@dataclass(frozen=True)
class DantzigStrategy:
    p: Vec
    q: Vec
    t: Fraction

    def __post_init__(self):
        if any(v < 0 for v in self.p + self.q) or self.t < 0:
            raise ValueError("strategy entries must be nonnegative")
        if total(self.p) + total(self.q) + self.t != 1:
            raise ValueError("strategy entries must sum to 1")

    @classmethod
    def split(cls, lp: LPInstance, s) -> "DantzigStrategy":
        s = tuple(s)
        if len(s) != lp.m + lp.n + 1:
            raise ValueError(f"strategy has {len(s)} entries, expected {lp.m + lp.n + 1}")
        return cls(tuple(s[:lp.m]), tuple(s[lp.m:lp.m + lp.n]), s[-1])

    def joined(self) -> Vec:
        return self.p + self.q + (self.t,)

    def gap(self, lp: LPInstance) -> Fraction:
        """``bᵀp − cᵀq``."""
        return dot(lp.b, self.p) - dot(lp.c, self.q)


@dataclass(frozen=True)
class Hole:
    """A maximin strategy with ``t = 0`` and ``bᵀp = cᵀq``: no LP answer can be read off."""

    strategy: DantzigStrategy
    kind: str = "hole"


def dantzig_matrix(lp: LPInstance) -> DantzigGame:
    m, n = lp.m, lp.n
    zero = Fraction(0)
    rows = []
    for i in range(m):
        rows.append((zero,) * m + lp.A[i] + (-lp.b[i],))
    for j in range(n):
        rows.append(tuple(-lp.A[i][j] for i in range(m)) + (zero,) * n + (lp.c[j],))
    rows.append(lp.b + tuple(-cj for cj in lp.c) + (zero,))
    return DantzigGame(tuple(rows), lp)


def verify_dantzig_strategy(lp: LPInstance, s: DantzigStrategy) -> Verification:
    """Maximin check of ``s`` for both players at value 0."""
    g = dantzig_matrix(lp).game
    joined = s.joined()
    return verify_maximin(g, GameSolution(0, joined, joined))


def _require_maximin(lp: LPInstance, s: DantzigStrategy) -> None:
    report = verify_dantzig_strategy(lp, s)
    if not report:
        raise ValueError(f"not a maximin strategy of the skew game: {[c.detail for c in report.violations]}")


def extract_classic(lp: LPInstance, s: DantzigStrategy) -> Union[LPOutcome, Hole]:
    _require_maximin(lp, s)
    if s.t > 0:
        return OptimalPair(scale(1 / s.t, s.q), scale(1 / s.t, s.p), dot(lp.c, s.q) / s.t)
    if s.gap(lp) < 0:
        z_ok = bool(farkas_checks(lp, s.p))
        w_ok = bool(ray_checks(lp, s.q))
        if z_ok:
            return InfeasibilityCert(s.p, s.q if w_ok else None)
        assert w_ok, "one of the two certificates must verify when the gap is negative"
        return UnboundednessCert(s.q)
    return Hole(s)


def extract_positive(lp: LPInstance, s: DantzigStrategy) -> LPOutcome:
    if any(bi <= 0 for bi in lp.b) or any(cj <= 0 for cj in lp.c):
        raise PreconditionError("extract_positive needs b > 0 and c > 0")
    _require_maximin(lp, s)
    if s.t > 0:
        out: LPOutcome = OptimalPair(scale(1 / s.t, s.q), scale(1 / s.t, s.p), dot(lp.c, s.q) / s.t)
    else:
        if all(v == 0 for v in s.q):
            raise AssertionError("t = 0 with q = 0 contradicts b > 0")
        out = UnboundednessCert(s.q, zeros(lp.n))
    report = verify_outcome(lp, out)
    if not report:
        raise AssertionError(f"internal error: extracted outcome fails {report.violations}")
    return out


def solve_dantzig_strategy(lp: LPInstance) -> DantzigStrategy:
    """A minimax strategy of the skew game, taken from the column player."""
    sol = solve_game(dantzig_matrix(lp).game)
    assert sol.value == 0
    return DantzigStrategy.split(lp, sol.q.probs)


def solve_via_dantzig(lp: LPInstance, classic: bool = True) -> Union[LPOutcome, Hole]:
    s = solve_dantzig_strategy(lp)
    return extract_classic(lp, s) if classic else extract_positive(lp, s)
