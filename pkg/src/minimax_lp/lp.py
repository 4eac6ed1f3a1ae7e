"""Linear programs ``max cᵀx s.t. Ax ≤ b, x ≥ 0`` and their certificates.

Every instance has exactly one of three outcomes: an optimal primal-dual
pair, a Farkas certificate that the primal is infeasible, or a ray that
makes the primal unbounded. :func:`solve_lp` always returns one of them,
and :func:`verify_outcome` checks any claimed outcome exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional, Sequence, Tuple, Union

from .exact_math import (
    DimensionError,
    Mat,
    Scalar,
    Vec,
    dot,
    mat,
    mat_vec,
    shape,
    transpose,
    vec,
    vec_mat,
    zeros,
)


@dataclass(frozen=True)
class LPInstance:
    A: Mat
    b: Vec
    c: Vec

    def __init__(self, A: Sequence[Sequence[Scalar]], b: Sequence[Scalar], c: Sequence[Scalar]):
        object.__setattr__(self, "A", mat(A))
        object.__setattr__(self, "b", vec(b))
        object.__setattr__(self, "c", vec(c))
        m, n = shape(self.A)
        if len(self.b) != m:
            raise DimensionError(f"b has {len(self.b)} entries but A has {m} rows")
        if len(self.c) != n:
            raise DimensionError(f"c has {len(self.c)} entries but A has {n} columns")

    @property
    def m(self) -> int:
        return len(self.A)

    @property
    def n(self) -> int:
        return len(self.A[0])

    def dual_as_primal(self) -> "LPInstance":
        """The dual ``min bᵀy, Aᵀy ≥ c, y ≥ 0`` rewritten as ``max -bᵀy, -Aᵀy ≤ -c``."""
        At = transpose(self.A)
        return LPInstance([[-a for a in row] for row in At], [-x for x in self.c], [-x for x in self.b])


@dataclass(frozen=True)
class OptimalPair:
    x: Vec
    y: Vec
    value: Fraction
    kind: Literal["optimal"] = field(default="optimal", init=False)


@dataclass(frozen=True)
class InfeasibilityCert:
    """``z ≥ 0, Aᵀz ≥ 0, bᵀz < 0``.

    ``dual_ray`` is filled in when the dual is infeasible as well; it is
    a vector ``w ≥ 0`` with ``Aw ≤ 0`` and ``cᵀw > 0``.
    """

    z: Vec
    dual_ray: Optional[Vec] = None
    kind: Literal["infeasible"] = field(default="infeasible", init=False)


@dataclass(frozen=True)
class UnboundednessCert:
    w: Vec
    feasible_witness: Optional[Vec] = None
    kind: Literal["unbounded"] = field(default="unbounded", init=False)


LPOutcome = Union[OptimalPair, InfeasibilityCert, UnboundednessCert]


@dataclass(frozen=True)
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Verification:
    """A checklist of exact inequalities; truthy iff every item passed."""

    checks: Tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def violations(self) -> Tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def __bool__(self) -> bool:
        return self.ok

    def __add__(self, other: "Verification") -> "Verification":
        return Verification(self.checks + other.checks)


_OPS = {
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
    "==": lambda a, b: a == b,
    "<": lambda a, b: a < b,
    ">": lambda a, b: a > b,
}


def vector_check(label: str, lhs: Vec, op: str, rhs: Vec) -> Check:
    bad = [f"[{k}] {a} {op} {b} fails" for k, (a, b) in enumerate(zip(lhs, rhs))
           if not _OPS[op](a, b)]
    return Check(label, not bad, "; ".join(bad))


def scalar_check(label: str, lhs: Fraction, op: str, rhs: Fraction) -> Check:
    ok = _OPS[op](lhs, rhs)
    return Check(label, ok, "" if ok else f"{lhs} {op} {rhs} fails")


def _need_len(v: Vec, n: int, name: str) -> None:
    if len(v) != n:
        raise DimensionError(f"{name} has {len(v)} entries, expected {n}")


def ray_checks(lp: LPInstance, w: Vec, label: str = "w") -> Verification:
    _need_len(w, lp.n, label)
    return Verification((
        vector_check(f"A{label} <= 0", mat_vec(lp.A, w), "<=", zeros(lp.m)),
        vector_check(f"{label} >= 0", w, ">=", zeros(lp.n)),
        scalar_check(f"c^T {label} > 0", dot(lp.c, w), ">", Fraction(0)),
    ))


def primal_feasibility(lp: LPInstance, x: Vec, label: str = "x") -> Verification:
    _need_len(x, lp.n, label)
    return Verification((
        vector_check(f"A{label} <= b", mat_vec(lp.A, x), "<=", lp.b),
        vector_check(f"{label} >= 0", x, ">=", zeros(lp.n)),
    ))


def dual_feasibility(lp: LPInstance, y: Vec, label: str = "y") -> Verification:
    _need_len(y, lp.m, label)
    return Verification((
        vector_check(f"A^T {label} >= c", vec_mat(y, lp.A), ">=", lp.c),
        vector_check(f"{label} >= 0", y, ">=", zeros(lp.m)),
    ))


def farkas_checks(lp: LPInstance, z: Vec, label: str = "z") -> Verification:
    _need_len(z, lp.m, label)
    return Verification((
        vector_check(f"A^T {label} >= 0", vec_mat(z, lp.A), ">=", zeros(lp.n)),
        vector_check(f"{label} >= 0", z, ">=", zeros(lp.m)),
        scalar_check(f"b^T {label} < 0", dot(lp.b, z), "<", Fraction(0)),
    ))


def verify_outcome(lp: LPInstance, o: LPOutcome) -> Verification:
    """Check every defining inequality of the claimed outcome exactly."""
    if isinstance(o, OptimalPair):
        return (primal_feasibility(lp, o.x) + dual_feasibility(lp, o.y) + Verification((
            scalar_check("c^T x == value", dot(lp.c, o.x), "==", o.value),
            scalar_check("b^T y == value", dot(lp.b, o.y), "==", o.value),
        )))
    if isinstance(o, InfeasibilityCert):
        out = farkas_checks(lp, o.z)
        if o.dual_ray is not None:
            out = out + ray_checks(lp, o.dual_ray, "w_dual")
        return out
    if isinstance(o, UnboundednessCert):
        out = ray_checks(lp, o.w)
        if o.feasible_witness is not None:
            out = out + primal_feasibility(lp, o.feasible_witness, "witness")
        return out
    raise TypeError(f"not an LP outcome: {o!r}")


@dataclass(frozen=True)
class DualCertificate:
    """A primal certificate reinterpreted for ``min bᵀy, Aᵀy ≥ c, y ≥ 0``.

    ``dual_unbounded``: a direction ``d ≥ 0`` with ``Aᵀd ≥ 0`` and
    ``bᵀd < 0``, so any dual-feasible point can be pushed down forever.
    ``dual_infeasible``: ``w ≥ 0`` with ``Aw ≤ 0`` and ``cᵀw > 0``, which
    contradicts ``cᵀw ≤ (Aᵀy)ᵀw = yᵀ(Aw) ≤ 0`` for every feasible ``y``.
    """

    kind: Literal["dual_unbounded", "dual_infeasible"]
    vector: Vec
    report: Verification


def cert_transfer_dual(cert: Union[InfeasibilityCert, UnboundednessCert], lp: LPInstance) -> DualCertificate:
    check = verify_outcome(lp, cert)
    if not check:
        raise ValueError(f"certificate does not verify: {[c.label for c in check.violations]}")
    if isinstance(cert, InfeasibilityCert):
        d = cert.z
        report = Verification((
            vector_check("direction d >= 0", d, ">=", zeros(lp.m)),
            vector_check("A^T d >= 0 (feasibility kept along d)", vec_mat(d, lp.A), ">=", zeros(lp.n)),
            scalar_check("b^T d < 0 (objective decreases along d)", dot(lp.b, d), "<", Fraction(0)),
        ))
        return DualCertificate("dual_unbounded", d, report)
    w = cert.w
    report = Verification((
        vector_check("w >= 0", w, ">=", zeros(lp.n)),
        vector_check("Aw <= 0", mat_vec(lp.A, w), "<=", zeros(lp.m)),
        scalar_check("c^T w > 0 (no y >= 0 has A^T y >= c)", dot(lp.c, w), ">", Fraction(0)),
    ))
    return DualCertificate("dual_infeasible", w, report)


# --- simplex -------------------------------------------------------------

class _Tableau:
    """Dense tableau ``B⁻¹[A_std | rhs]`` with Bland's pivoting rule."""

    def __init__(self, rows: list, basis: list):
        self.rows = rows
        self.basis = basis

    @property
    def width(self) -> int:
        return len(self.rows[0]) - 1

    def pivot(self, r: int, j: int) -> None:
        rows = self.rows
        p = rows[r][j]
        rows[r] = [a / p for a in rows[r]]
        pr = rows[r]
        for k, row in enumerate(rows):
            f = row[j]
            if k != r and f != 0:
                rows[k] = [a - f * b for a, b in zip(row, pr)]
        self.basis[r] = j

    def reduced_costs(self, cost: list) -> list:
        cb = [cost[b] for b in self.basis]
        return [cost[j] - sum((cb[k] * self.rows[k][j] for k in range(len(cb)) if cb[k]), Fraction(0))
                for j in range(self.width)]

    def objective(self, cost: list) -> Fraction:
        return sum((cost[b] * row[-1] for b, row in zip(self.basis, self.rows)), Fraction(0))

    def run(self, cost: list, allowed: list) -> Optional[int]:
        """Maximize ``cost`` over columns flagged in ``allowed``.

        Returns ``None`` at an optimum, or the entering column whose
        ratio test found no blocking row (an unbounded direction).
        """
        while True:
            red = self.reduced_costs(cost)
            in_basis = set(self.basis)
            j = next((j for j in range(self.width)
                      if allowed[j] and j not in in_basis and red[j] > 0), None)
            if j is None:
                return None
            best = None
            for k, row in enumerate(self.rows):
                if row[j] > 0:
                    key = (row[-1] / row[j], self.basis[k])
                    if best is None or key < best[0]:
                        best = (key, k)
            if best is None:
                return j
            self.pivot(best[1], j)

    def multipliers(self, cost: list, init_cols: list) -> list:
        # The starting basis is the identity, so its columns now hold B⁻¹.
        cb = [cost[b] for b in self.basis]
        return [sum((cb[k] * self.rows[k][col] for k in range(len(cb)) if cb[k]), Fraction(0))
                for col in init_cols]


def _check_or_raise(lp: LPInstance, o: LPOutcome) -> LPOutcome:
    report = verify_outcome(lp, o)
    if not report:
        raise AssertionError(f"internal error: produced outcome fails {report.violations}")
    return o


def solve_lp(lp: LPInstance, *, check_dual: bool = True) -> LPOutcome:
    """Solve ``max cᵀx, Ax ≤ b, x ≥ 0`` with a two-phase exact simplex.

    Pivoting follows Bland's smallest-index rule, so the method terminates
    even on degenerate instances. Infeasibility certificates are the
    phase-one simplex multipliers; unboundedness certificates are the
    ray along the unblocked entering column, with the current basic
    solution as feasible witness. When the primal is infeasible and
    ``check_dual`` is set, the dual is also examined and a dual
    infeasibility ray is attached if one exists.
    """
    m, n = lp.m, lp.n
    sign = [Fraction(-1) if bi < 0 else Fraction(1) for bi in lp.b]
    art_rows = [i for i in range(m) if lp.b[i] < 0]
    art_col = {i: n + m + k for k, i in enumerate(art_rows)}
    width = n + m + len(art_rows)

    rows = []
    for i in range(m):
        row = [Fraction(0)] * (width + 1)
        for j in range(n):
            row[j] = sign[i] * lp.A[i][j]
        row[n + i] = sign[i]
        if i in art_col:
            row[art_col[i]] = Fraction(1)
        row[-1] = sign[i] * lp.b[i]
        rows.append(row)
    init_cols = [art_col.get(i, n + i) for i in range(m)]
    tab = _Tableau(rows, list(init_cols))

    if art_rows:
        cost1 = [Fraction(0)] * width
        for col in art_col.values():
            cost1[col] = Fraction(-1)
        tab.run(cost1, [True] * width)
        if tab.objective(cost1) < 0:
            pi = tab.multipliers(cost1, init_cols)
            z = tuple(s * p for s, p in zip(sign, pi))
            ray = None
            if check_dual:
                dual = solve_lp(lp.dual_as_primal(), check_dual=False)
                if isinstance(dual, InfeasibilityCert):
                    ray = dual.z
            return _check_or_raise(lp, InfeasibilityCert(z, ray))
        artificial = set(art_col.values())
        for r in range(m):
            if tab.basis[r] in artificial:
                j = next((j for j in range(n + m) if tab.rows[r][j] != 0), None)
                if j is not None:
                    tab.pivot(r, j)

    cost2 = list(lp.c) + [Fraction(0)] * (width - n)
    allowed = [j < n + m for j in range(width)]
    entering = tab.run(cost2, allowed)

    x = [Fraction(0)] * n
    for k, b in enumerate(tab.basis):
        if b < n:
            x[b] = tab.rows[k][-1]
    x = tuple(x)

    if entering is not None:
        w = [Fraction(0)] * n
        if entering < n:
            w[entering] = Fraction(1)
        for k, b in enumerate(tab.basis):
            if b < n:
                w[b] = -tab.rows[k][entering]
        return _check_or_raise(lp, UnboundednessCert(tuple(w), x))

    pi = tab.multipliers(cost2, init_cols)
    y = tuple(s * p for s, p in zip(sign, pi))
    return _check_or_raise(lp, OptimalPair(x, y, dot(lp.c, x)))


def outcome_value(o: LPOutcome) -> Optional[Fraction]:
    return o.value if isinstance(o, OptimalPair) else None

