"""Zero-sum matrix games: exact solution, maximin checks, fictitious play.

The row player receives ``M[i][j]`` from the column player.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .exact_math import (
    Mat,
    Scalar,
    Vec,
    mat,
    mat_vec,
    ones,
    scale,
    shape,
    total,
    vec,
    vec_mat,
)
from .lp import LPInstance, OptimalPair, Verification, solve_lp, vector_check


@dataclass(frozen=True)
class Game:
    M: Mat

    def __init__(self, M: Sequence[Sequence[Scalar]]):
        object.__setattr__(self, "M", mat(M))

    @property
    def shape(self):
        return shape(self.M)


@dataclass(frozen=True)
class MixedStrategy:
    probs: Vec

    def __init__(self, probs: Sequence[Scalar]):
        probs = vec(probs)
        if not probs or any(p < 0 for p in probs) or total(probs) != 1:
            raise ValueError(f"not a probability vector: {probs}")
        object.__setattr__(self, "probs", probs)

    def __len__(self) -> int:
        return len(self.probs)


@dataclass(frozen=True)
class GameSolution:
    value: Fraction
    p: MixedStrategy
    q: MixedStrategy

    def __init__(self, value: Scalar, p, q):
        object.__setattr__(self, "value", vec([value])[0])
        object.__setattr__(self, "p", p if isinstance(p, MixedStrategy) else MixedStrategy(p))
        object.__setattr__(self, "q", q if isinstance(q, MixedStrategy) else MixedStrategy(q))


def verify_maximin(g: Game, s: GameSolution) -> Verification:
    """Check ``pᵀM ≥ value·𝟏`` and ``Mq ≤ value·𝟏`` exactly."""
    m, n = g.shape
    if len(s.p) != m or len(s.q) != n:
        raise ValueError(f"strategy sizes {len(s.p)}x{len(s.q)} do not fit a {m}x{n} game")
    return Verification((
        vector_check("p^T M >= value (row guarantee)", vec_mat(s.p.probs, g.M), ">=", scale(s.value, ones(n))),
        vector_check("M q <= value (column guarantee)", mat_vec(g.M, s.q.probs), "<=", scale(s.value, ones(m))),
    ))


def solve_game(g: Game) -> GameSolution:
    """Exact value and a pair of maximin strategies.

    The payoffs are shifted to be at least 1, which makes the column
    player's program equivalent to ``max 𝟏ᵀξ, Mξ ≤ 𝟏, ξ ≥ 0`` with a
    finite positive optimum. One simplex solve gives ``ξ`` and the dual
    ``η``; normalizing them gives ``q`` and ``p``.
    """
    m, n = g.shape
    shift = 1 - min(min(row) for row in g.M)
    shifted = [[a + shift for a in row] for row in g.M]
    out = solve_lp(LPInstance(shifted, ones(m), ones(n)))
    assert isinstance(out, OptimalPair), out
    v = 1 / out.value
    sol = GameSolution(v - shift, scale(v, out.y), scale(v, out.x))
    report = verify_maximin(g, sol)
    if not report:
        raise AssertionError(f"internal error: game solution fails {report.violations}")
    return sol


@dataclass(frozen=True)
class FictitiousPlayResult:
    p: Vec
    q: Vec
    lower: Fraction
    upper: Fraction
    rounds: int

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    def contains(self, value: Fraction) -> bool:
        return self.lower <= value <= self.upper


def solve_game_fictitious(g: Game, rounds: int) -> FictitiousPlayResult:
    """Brown-style simultaneous fictitious play.

    Both players start on their first action and then best-respond to the
    opponent's empirical mixture, breaking ties toward the lowest index.
    The returned bracket is what the empirical strategies guarantee:
    ``lower = min_j (p̂ᵀM)_j`` and ``upper = max_i (Mq̂)_i``.
    """
    if rounds < 1:
        raise ValueError("rounds must be positive")
    m, n = g.shape
    # integer payoffs keep the inner loop cheap
    den = lcm(*(a.denominator for row in g.M for a in row))
    Z = [[int(a * den) for a in row] for row in g.M]
    row_gain = [0] * m
    col_loss = [0] * n
    row_count = [0] * m
    col_count = [0] * n
    i = j = 0
    for _ in range(rounds):
        row_count[i] += 1
        col_count[j] += 1
        for k in range(m):
            row_gain[k] += Z[k][j]
        zi = Z[i]
        for k in range(n):
            col_loss[k] += zi[k]
        best = max(row_gain)
        i = row_gain.index(best)
        worst = min(col_loss)
        j = col_loss.index(worst)
    p = tuple(Fraction(c, rounds) for c in row_count)
    q = tuple(Fraction(c, rounds) for c in col_count)
    return FictitiousPlayResult(p, q, min(vec_mat(p, g.M)), max(mat_vec(g.M, q)), rounds)

