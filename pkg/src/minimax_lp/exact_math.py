"""Exact rational scalars, vectors and matrices.

Vectors are tuples of :class:`fractions.Fraction`; matrices are tuples of
row tuples. Both are immutable, hashable and compare by value, so every
identity in the rest of the package can be asserted with ``==``.
"""
from __future__ import annotations

import enum
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Tuple, Union

Rat = Fraction
Vec = Tuple[Fraction, ...]
Mat = Tuple[Vec, ...]

Scalar = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[+-]?\d+)?$")


class DimensionError(ValueError):
    """Operand shapes do not fit together."""


class PreconditionError(ValueError):
    """An operation was called on data outside its domain."""


class Order(enum.Enum):
    LE = "LE"
    GE = "GE"
    EQ = "EQ"
    INCOMPARABLE = "INCOMPARABLE"


def rat(num: int, den: int = 1) -> Fraction:
    """Canonical rational ``num/den``; the sign always sits on the numerator."""
    if den == 0:
        raise ValueError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def to_rat(value: Scalar) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string exactly.

    Floats are rejected: they cannot be converted without committing to
    the binary rounding that happened when the literal was parsed.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"malformed rational {value!r}")
        num, _, den = text.partition("/")
        return rat(int(num), int(den) if den else 1)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot convert {type(value).__name__} exactly")


def vec(entries: Iterable[Scalar]) -> Vec:
    return tuple(to_rat(e) for e in entries)


def mat(rows: Iterable[Iterable[Scalar]]) -> Mat:
    out = tuple(vec(r) for r in rows)
    if not out or not out[0]:
        raise DimensionError("matrix must have at least one row and one column")
    width = len(out[0])
    for i, row in enumerate(out):
        if len(row) != width:
            raise DimensionError(f"row {i} has {len(row)} entries, expected {width}")
    return out


def shape(M: Mat) -> Tuple[int, int]:
    return len(M), len(M[0])


def zeros(n: int) -> Vec:
    return (Fraction(0),) * n


def ones(n: int) -> Vec:
    return (Fraction(1),) * n


def unit(n: int, k: int) -> Vec:
    return tuple(Fraction(1 if i == k else 0) for i in range(n))


def identity(n: int) -> Mat:
    return tuple(unit(n, i) for i in range(n))


def diag(d: Sequence[Scalar]) -> Mat:
    """Dense materialization of a diagonal; only used for display."""
    d = vec(d)
    return tuple(tuple(d[i] if i == j else Fraction(0) for j in range(len(d)))
                 for i in range(len(d)))


def transpose(M: Mat) -> Mat:
    return tuple(zip(*M))


def _check_len(u: Sequence, v: Sequence, what: str) -> None:
    if len(u) != len(v):
        raise DimensionError(f"{what}: length {len(u)} vs {len(v)}")


def dot(u: Vec, v: Vec) -> Fraction:
    _check_len(u, v, "dot")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def mat_vec(M: Mat, v: Vec) -> Vec:
    """``M v``."""
    if len(M[0]) != len(v):
        raise DimensionError(f"mat_vec: matrix has {len(M[0])} columns, vector has {len(v)} entries")
    return tuple(dot(row, v) for row in M)


def vec_mat(v: Vec, M: Mat) -> Vec:
    """``vᵀ M``, i.e. ``Mᵀ v``."""
    if len(M) != len(v):
        raise DimensionError(f"vec_mat: matrix has {len(M)} rows, vector has {len(v)} entries")
    return tuple(dot(v, col) for col in zip(*M))


def add(u: Vec, v: Vec) -> Vec:
    _check_len(u, v, "add")
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vec, v: Vec) -> Vec:
    _check_len(u, v, "sub")
    return tuple(a - b for a, b in zip(u, v))


def scale(k: Scalar, v: Vec) -> Vec:
    k = to_rat(k)
    return tuple(k * a for a in v)


def total(v: Vec) -> Fraction:
    return sum(v, Fraction(0))


def componentwise_cmp(u: Vec, v: Vec) -> Order:
    _check_len(u, v, "componentwise_cmp")
    le = all(a <= b for a, b in zip(u, v))
    ge = all(a >= b for a, b in zip(u, v))
    if le and ge:
        return Order.EQ
    if le:
        return Order.LE
    if ge:
        return Order.GE
    return Order.INCOMPARABLE


def solve_square(M: Mat, rhs: Vec) -> Vec | None:
    """Solve ``M u = rhs`` by exact Gauss-Jordan elimination.

    Returns ``None`` when ``M`` is singular.
    """
    n = len(M)
    if any(len(row) != n for row in M) or len(rhs) != n:
        raise DimensionError("solve_square needs a square system")
    aug = [list(row) + [r] for row, r in zip(M, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [a / p for a in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(row[n] for row in aug)


def fmt_rat(r: Fraction, decimals: bool = False) -> str:
    s = str(r)
    if decimals and r.denominator != 1:
        s += f" (~{float(r):.6g})"
    return s


def fmt_vec(v: Vec) -> str:
    return "(" + ", ".join(str(a) for a in v) + ")"
