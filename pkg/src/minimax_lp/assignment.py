"""The hide-and-seek game for the assignment problem.

Edges ``(i, j)`` of the complete bipartite graph are numbered row-major,
``l = i*n + j``. Game rows ``0..n-1`` are the left vertices (workers),
rows ``n..2n-1`` the right vertices (jobs). The seeker (row player)
names a vertex, the hider (column player) an edge, and the payoff is
``1/μ_ij`` when the vertex is an endpoint of the edge.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Dict, Sequence, Tuple

from .exact_math import Mat, PreconditionError, Scalar, Vec, mat, scale, total
from .games import Game, GameSolution, MixedStrategy, solve_game, verify_maximin
from .lp import LPInstance, OptimalPair, Verification, solve_lp

MAX_ENUMERATION_N = 8


@dataclass(frozen=True)
class AssignmentInstance:
    mu: Mat

    def __init__(self, mu: Sequence[Sequence[Scalar]]):
        mu = mat(mu)
        if len(mu) != len(mu[0]):
            raise ValueError("surplus matrix must be square")
        for i, row in enumerate(mu):
            for j, v in enumerate(row):
                if v <= 0:
                    raise PreconditionError(f"mu[{i}][{j}] = {v} is not positive")
        object.__setattr__(self, "mu", mu)

    @property
    def n(self) -> int:
        return len(self.mu)

    def edge(self, l: int) -> Tuple[int, int]:
        return divmod(l, self.n)

    def weight(self, sigma: Sequence[int]) -> Fraction:
        return sum((self.mu[i][sigma[i]] for i in range(self.n)), Fraction(0))


@dataclass(frozen=True)
class HideAndSeekGame:
    M: Mat
    column_index: Dict[int, Tuple[int, int]]

    @property
    def game(self) -> Game:
        return Game(self.M)


def assignment_lp(a: AssignmentInstance) -> LPInstance:
    """Fractional assignment: row sums ≤ 1, column sums ≤ 1, maximize ``Σ μ_ij x_ij``."""
    n = a.n
    A = [[0] * (n * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            A[i][i * n + j] = 1
            A[n + j][i * n + j] = 1
    return LPInstance(A, [1] * (2 * n), [a.mu[i][j] for i in range(n) for j in range(n)])


def hide_and_seek(a: AssignmentInstance) -> HideAndSeekGame:
    n = a.n
    zero = Fraction(0)
    rows = [[zero] * (n * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            rows[i][i * n + j] = 1 / a.mu[i][j]
            rows[n + j][i * n + j] = 1 / a.mu[i][j]
    index = {l: a.edge(l) for l in range(n * n)}
    return HideAndSeekGame(tuple(map(tuple, rows)), index)


def _check_permutation(sigma: Sequence[int], n: int) -> None:
    if sorted(sigma) != list(range(n)):
        raise ValueError(f"{list(sigma)} is not a permutation of 0..{n - 1}")


def matching_to_column_strategy(a: AssignmentInstance, sigma: Sequence[int]) -> MixedStrategy:
    """Hide on edge ``(i, σ(i))`` with probability proportional to ``μ_iσ(i)``."""
    n = a.n
    _check_permutation(sigma, n)
    w = a.weight(sigma)
    probs = [Fraction(0)] * (n * n)
    for i in range(n):
        probs[i * n + sigma[i]] = a.mu[i][sigma[i]] / w
    return MixedStrategy(probs)


def row_strategy_from_cover(u: Vec, v: Vec) -> MixedStrategy:
    """Seek vertex ``k`` with probability proportional to its cover weight."""
    uv = tuple(u) + tuple(v)
    return MixedStrategy(scale(1 / total(uv), uv))


def max_weight_matchings(a: AssignmentInstance) -> Tuple[Fraction, Tuple[Tuple[int, ...], ...]]:
    """Best weight and every permutation attaining it, by exhaustive search."""
    if a.n > MAX_ENUMERATION_N:
        raise ValueError(f"n = {a.n} is too large for permutation enumeration (limit {MAX_ENUMERATION_N})")
    best, arg = None, []
    for sigma in permutations(range(a.n)):
        w = a.weight(sigma)
        if best is None or w > best:
            best, arg = w, [sigma]
        elif w == best:
            arg.append(sigma)
    return best, tuple(arg)


@dataclass(frozen=True)
class HideAndSeekCheck:
    game_value: Fraction
    matching_weight: Fraction
    holds: bool
    solution: GameSolution

    def __iter__(self):
        return iter((self.game_value, self.matching_weight, self.holds))


def check_hide_and_seek_value(a: AssignmentInstance) -> HideAndSeekCheck:
    weight, _ = max_weight_matchings(a)
    sol = solve_game(hide_and_seek(a).game)
    return HideAndSeekCheck(sol.value, weight, sol.value == 1 / weight, sol)


def verify_matching_strategies(a: AssignmentInstance) -> Verification:
    """For each maximum matching, pair its hider strategy with the seeker
    strategy built from an optimal vertex cover, and check both are
    maximin at value ``1/weight``."""
    weight, best = max_weight_matchings(a)
    cover = solve_lp(assignment_lp(a))
    assert isinstance(cover, OptimalPair) and cover.value == weight
    p = row_strategy_from_cover(cover.y[:a.n], cover.y[a.n:])
    g = hide_and_seek(a).game
    out = Verification(())
    for sigma in best:
        q = matching_to_column_strategy(a, sigma)
        out = out + verify_maximin(g, GameSolution(1 / weight, p, q))
    return out
