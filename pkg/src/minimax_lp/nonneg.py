"""LPs with a nonnegative constraint matrix.

Pre-processing settles the trivial cases (a negative right-hand side,
a free column with positive profit, nothing left after deletions) and
otherwise strips rows with ``b_i = 0``, the columns those rows force to
zero, and columns with ``c_j ≤ 0``. What remains has ``b̂ > 0, ĉ > 0``
and is solved through a game; post-processing pads the answer back.

Indices are 0-based throughout.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Literal, Optional, Tuple, Union

from .dantzig import solve_via_dantzig
from .exact_math import PreconditionError, unit, zeros
from .lp import (
    InfeasibilityCert,
    LPInstance,
    LPOutcome,
    OptimalPair,
    UnboundednessCert,
    verify_outcome,
)
from .reduction import solve_positive_lp


@dataclass(frozen=True)
class IndexSets:
    I0: FrozenSet[int]
    J0: FrozenSet[int]
    J: FrozenSet[int]
    bigM: Fraction

    @property
    def removed_columns(self) -> FrozenSet[int]:
        return self.J0 | self.J

    @property
    def pad(self) -> Fraction:
        """Dual entry used on ``I0``.

        ``bigM`` is negative when every ratio ``c_j/a_ij`` over ``J0`` is;
        clamping at 0 keeps ``y ≥ 0`` and still gives ``a_ij·pad ≥ c_j``.
        """
        return max(self.bigM, Fraction(0))


@dataclass(frozen=True)
class RestrictedLP:
    hat: LPInstance
    sets: IndexSets
    original_dims: Tuple[int, int]
    kept_rows: Tuple[int, ...]
    kept_cols: Tuple[int, ...]


def _require_nonneg(lp: LPInstance) -> None:
    for i, row in enumerate(lp.A):
        for j, a in enumerate(row):
            if a < 0:
                raise PreconditionError(f"A[{i}][{j}] = {a} is negative; A >= 0 is required")


def index_sets(lp: LPInstance) -> IndexSets:
    A, b, c = lp.A, lp.b, lp.c
    I0 = frozenset(i for i in range(lp.m) if b[i] == 0)
    J0 = frozenset(j for j in range(lp.n) if any(A[i][j] > 0 for i in I0))
    J = frozenset(j for j in range(lp.n) if c[j] <= 0)
    ratios = [c[j] / A[i][j] for j in J0 for i in I0 if A[i][j] > 0]
    return IndexSets(I0, J0, J, max(ratios) if ratios else Fraction(0))


def _padded_dual(sets: IndexSets, m: int, y_hat: Optional[dict] = None) -> tuple:
    y_hat = y_hat or {}
    return tuple(sets.pad if i in sets.I0 else y_hat.get(i, Fraction(0)) for i in range(m))


def preprocess(lp: LPInstance) -> Union[LPOutcome, RestrictedLP]:
    """Settle the trivial cases or return the restricted pair."""
    _require_nonneg(lp)
    m, n = lp.m, lp.n
    for i in range(m):
        if lp.b[i] < 0:
            return InfeasibilityCert(unit(m, i))
    sets = index_sets(lp)
    for j in range(n):
        if j not in sets.J and all(lp.A[i][j] == 0 for i in range(m)):
            return UnboundednessCert(unit(n, j), zeros(n))
    if len(sets.I0) == m or len(sets.removed_columns) == n:
        return OptimalPair(zeros(n), _padded_dual(sets, m), Fraction(0))
    return restrict(lp, sets)


def restrict(lp: LPInstance, sets: IndexSets) -> RestrictedLP:
    """Delete rows ``I0`` and columns ``J0 ∪ J``.

    :func:`preprocess` only calls this once a zero column with positive
    profit has been ruled out, in which case the restricted primal is
    bounded. Calling it directly skips that check.
    """
    m, n = lp.m, lp.n
    rows = tuple(i for i in range(m) if i not in sets.I0)
    cols = tuple(j for j in range(n) if j not in sets.removed_columns)
    if not rows or not cols:
        raise ValueError("nothing left after deletions")
    hat = LPInstance([[lp.A[i][j] for j in cols] for i in rows],
                     [lp.b[i] for i in rows], [lp.c[j] for j in cols])
    return RestrictedLP(hat, sets, (m, n), rows, cols)


def postprocess(r: RestrictedLP, hat_outcome: LPOutcome) -> LPOutcome:
    m, n = r.original_dims
    if isinstance(hat_outcome, InfeasibilityCert):
        raise ValueError("the restricted primal has b > 0 and cannot be infeasible")
    if isinstance(hat_outcome, OptimalPair):
        xs = dict(zip(r.kept_cols, hat_outcome.x))
        x = tuple(xs.get(j, Fraction(0)) for j in range(n))
        y = _padded_dual(r.sets, m, dict(zip(r.kept_rows, hat_outcome.y)))
        return OptimalPair(x, y, hat_outcome.value)
    ws = dict(zip(r.kept_cols, hat_outcome.w))
    return UnboundednessCert(tuple(ws.get(j, Fraction(0)) for j in range(n)), zeros(n))


def solve_nonneg_lp(lp: LPInstance, engine: Literal["vn", "dantzig"] = "vn") -> LPOutcome:
    """Solve an LP with ``A ≥ 0``.

    ``engine`` picks the game used for the restricted pair: ``"vn"`` is
    the scaled reduction, ``"dantzig"`` the skew-symmetric one (sound
    here because the restricted data is strictly positive).
    """
    pre = preprocess(lp)
    if isinstance(pre, RestrictedLP):
        if engine == "vn":
            hat_out = solve_positive_lp(pre.hat)
        elif engine == "dantzig":
            hat_out = solve_via_dantzig(pre.hat, classic=False)
        else:
            raise ValueError(f"unknown engine {engine!r}")
        out = postprocess(pre, hat_out)
    else:
        out = pre
    report = verify_outcome(lp, out)
    if not report:
        raise AssertionError(f"internal error: outcome fails {report.violations}")
    return out


def zero_column_unbounded_check(lp: LPInstance) -> Optional[int]:
    """Least ``j`` with ``c_j > 0`` and an all-zero column, if any.

    For feasible ``A ≥ 0`` instances such a column exists exactly when
    the primal is unbounded.
    """
    _require_nonneg(lp)
    if any(bi < 0 for bi in lp.b):
        raise PreconditionError("the primal must be feasible (b >= 0)")
    for j in range(lp.n):
        if lp.c[j] > 0 and all(lp.A[i][j] == 0 for i in range(lp.m)):
            return j
    return None
