"""Vertex-enumeration oracle for small LPs.

Shares nothing with the simplex code beyond the instance types: every
candidate vertex is obtained by solving a square subsystem of tight
constraints with Gaussian elimination, then filtered for feasibility.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb
from typing import List

from .exact_math import Mat, Vec, dot, mat_vec, solve_square, transpose
from .lp import InfeasibilityCert, LPInstance, LPOutcome, OptimalPair, UnboundednessCert


class EnumerationLimitError(ValueError):
    """The instance has more candidate bases than the caller allowed."""


def vertices(G: Mat, h: Vec, limit: int) -> List[Vec]:
    """All vertices of ``{u : Gu ≤ h, u ≥ 0}``, in enumeration order."""
    r, d = len(G), len(G[0])
    total = comb(r + d, d)
    if total > limit:
        raise EnumerationLimitError(f"{total} candidate bases exceed the limit {limit}")
    # constraint k < r is row k of G; constraint r + j is -u_j <= 0
    rows = list(G) + [tuple(Fraction(-1 if i == j else 0) for i in range(d)) for j in range(d)]
    rhs = list(h) + [Fraction(0)] * d
    found: List[Vec] = []
    seen = set()
    for tight in combinations(range(r + d), d):
        u = solve_square(tuple(rows[k] for k in tight), tuple(rhs[k] for k in tight))
        if u is None or u in seen:
            continue
        if all(x >= 0 for x in u) and all(a <= b for a, b in zip(mat_vec(G, u), h)):
            seen.add(u)
            found.append(u)
    return found


def brute_force_lp(lp: LPInstance, bound: int = 100_000) -> LPOutcome:
    """Solve ``lp`` by enumerating vertices of four small polyhedra.

    The primal region, the Farkas system ``{z ≥ 0 : Aᵀz ≥ 0, bᵀz ≤ -1}``,
    the ray system ``{w ≥ 0 : Aw ≤ 0, cᵀw ≥ 1}`` and the dual region are
    all pointed (their variables are sign-constrained), so each is empty
    exactly when it has no vertex. ``bound`` caps the number of square
    subsystems tried per polyhedron.
    """
    A, b, c = lp.A, lp.b, lp.c
    m, n = lp.m, lp.n
    primal = vertices(A, b, bound)
    if not primal:
        G = tuple(tuple(-a for a in col) for col in transpose(A)) + (b,)
        h = (Fraction(0),) * n + (Fraction(-1),)
        z = vertices(G, h, bound)
        assert z, "Farkas alternative must hold for an empty primal"
        return InfeasibilityCert(z[0])
    G = A + (tuple(-x for x in c),)
    h = (Fraction(0),) * m + (Fraction(-1),)
    rays = vertices(G, h, bound)
    if rays:
        return UnboundednessCert(rays[0], primal[0])
    x = max(primal, key=lambda v: dot(c, v))
    G = tuple(tuple(-a for a in col) for col in transpose(A))
    duals = vertices(G, tuple(-x for x in c), bound)
    assert duals, "strong duality: a bounded feasible primal has a feasible dual"
    y = min(duals, key=lambda v: dot(b, v))
    return OptimalPair(x, y, dot(c, x))
