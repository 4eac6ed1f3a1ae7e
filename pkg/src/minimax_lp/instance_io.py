"""Plain-text instance files.

Grammar (one item per line, ``#`` starts a comment)::

    file     := { header | section-name | data-row }
    header   := "kind" KIND | "m" INT | "n" INT | "status" STATUS
    KIND     := lp | game | assignment | outcome | game-solution
    STATUS   := optimal | infeasible | unbounded        (outcome files only)
    data-row := RATIONAL { RATIONAL }
    RATIONAL := [+-]DIGITS [ "/" [+-]DIGITS ]

A section name on its own line is followed by its data rows. Matrices
take one data row per matrix row; vectors may spread over several
lines. Sections per kind:

    lp             A (m×n), b (m), c (n)
    game           M (m×n)
    assignment     mu (n×n); m may be omitted
    outcome        optimal: x (n), y (m), value (1)
                   infeasible: z (m), optional w_dual (n)
                   unbounded: w (n), optional witness (n)
    game-solution  value (1), p (m), q (n)

Decimal notation is rejected so that every entry parses exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple, Union

from .assignment import AssignmentInstance
from .exact_math import Mat, Vec, to_rat
from .games import Game, GameSolution
from .lp import InfeasibilityCert, LPInstance, LPOutcome, OptimalPair, UnboundednessCert

KINDS = ("lp", "game", "assignment", "outcome", "game-solution")
STATUSES = ("optimal", "infeasible", "unbounded")


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class InstanceFile:
    kind: str
    m: int
    n: int
    sections: Dict[str, Union[Vec, Mat]] = field(default_factory=dict)
    status: Optional[str] = None

    def __hash__(self):
        return hash((self.kind, self.m, self.n, tuple(sorted(self.sections.items())), self.status))

    def to_lp(self) -> LPInstance:
        self._expect("lp")
        return LPInstance(self.sections["A"], self.sections["b"], self.sections["c"])

    def to_game(self) -> Game:
        self._expect("game")
        return Game(self.sections["M"])

    def to_assignment(self) -> AssignmentInstance:
        self._expect("assignment")
        return AssignmentInstance(self.sections["mu"])

    def to_outcome(self) -> LPOutcome:
        self._expect("outcome")
        s = self.sections
        if self.status == "optimal":
            return OptimalPair(s["x"], s["y"], s["value"][0])
        if self.status == "infeasible":
            return InfeasibilityCert(s["z"], s.get("w_dual"))
        return UnboundednessCert(s["w"], s.get("witness"))

    def to_game_solution(self) -> GameSolution:
        self._expect("game-solution")
        return GameSolution(self.sections["value"][0], self.sections["p"], self.sections["q"])

    def _expect(self, kind: str) -> None:
        if self.kind != kind:
            raise ParseError(f"expected a {kind!r} file, got {self.kind!r}")


def _layout(kind: str, m: int, n: int, status: Optional[str]) -> Tuple[Dict[str, tuple], set]:
    """Section name -> shape, where shape is (rows, cols) or (length,)."""
    if kind == "lp":
        return {"A": (m, n), "b": (m,), "c": (n,)}, set()
    if kind == "game":
        return {"M": (m, n)}, set()
    if kind == "assignment":
        return {"mu": (n, n)}, set()
    if kind == "game-solution":
        return {"value": (1,), "p": (m,), "q": (n,)}, set()
    if status == "optimal":
        return {"x": (n,), "y": (m,), "value": (1,)}, set()
    if status == "infeasible":
        return {"z": (m,), "w_dual": (n,)}, {"w_dual"}
    return {"w": (n,), "witness": (n,)}, {"witness"}


def parse_instance(text: str) -> InstanceFile:
    header: Dict[str, str] = {}
    raw: Dict[str, list] = {}
    first_line: Dict[str, int] = {}
    current = None
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split("#", 1)[0].split()
        if not tokens:
            continue
        key = tokens[0]
        if key in ("kind", "m", "n", "status"):
            if len(tokens) != 2:
                raise ParseError(f"{key!r} takes exactly one value", lineno)
            if key in header:
                raise ParseError(f"duplicate {key!r}", lineno)
            header[key] = tokens[1]
            current = None
            continue
        if len(tokens) == 1 and key[0].isalpha():
            if key in raw:
                raise ParseError(f"duplicate section {key!r}", lineno)
            raw[key] = []
            first_line[key] = lineno
            current = key
            continue
        if current is None:
            raise ParseError("data outside a section", lineno)
        try:
            raw[current].append((lineno, [to_rat(t) for t in tokens]))
        except (ValueError, TypeError) as exc:
            raise ParseError(str(exc), lineno) from None

    kind = header.get("kind")
    if kind not in KINDS:
        raise ParseError(f"unknown or missing kind {kind!r}; expected one of {', '.join(KINDS)}")
    status = header.get("status")
    if kind == "outcome" and status not in STATUSES:
        raise ParseError(f"outcome files need status in {STATUSES}, got {status!r}")
    if kind != "outcome" and status is not None:
        raise ParseError("status is only allowed in outcome files")
    try:
        n = int(header["n"])
        m = int(header.get("m", n if kind == "assignment" else ""))
    except (KeyError, ValueError):
        raise ParseError("header needs integer m and n") from None
    if m < 1 or n < 1:
        raise ParseError("dimensions must be positive")
    if kind == "assignment" and m != n:
        raise ParseError("assignment instances are square: m must equal n")

    layout, optional = _layout(kind, m, n, status)
    sections: Dict[str, Union[Vec, Mat]] = {}
    for name in raw:
        if name not in layout:
            raise ParseError(f"unexpected section {name!r} for kind {kind!r}", first_line[name])
    for name, shp in layout.items():
        if name not in raw:
            if name in optional:
                continue
            raise ParseError(f"missing section {name!r}")
        rows = raw[name]
        if len(shp) == 2:
            r, c = shp
            if len(rows) != r:
                raise ParseError(f"section {name!r} has {len(rows)} rows, expected {r}", first_line[name])
            for lineno, vals in rows:
                if len(vals) != c:
                    raise ParseError(f"row has {len(vals)} entries, expected {c}", lineno)
            sections[name] = tuple(tuple(vals) for _, vals in rows)
        else:
            flat = tuple(v for _, vals in rows for v in vals)
            if len(flat) != shp[0]:
                raise ParseError(f"section {name!r} has {len(flat)} entries, expected {shp[0]}", first_line[name])
            sections[name] = flat
    return InstanceFile(kind, m, n, sections, status)


def serialize(inst: InstanceFile) -> str:
    lines = [f"kind {inst.kind}"]
    if inst.status is not None:
        lines.append(f"status {inst.status}")
    lines += [f"m {inst.m}", f"n {inst.n}"]
    layout, _ = _layout(inst.kind, inst.m, inst.n, inst.status)
    for name, shp in layout.items():
        if name not in inst.sections:
            continue
        lines.append(name)
        data = inst.sections[name]
        if len(shp) == 2:
            lines += [" ".join(str(a) for a in row) for row in data]
        else:
            lines.append(" ".join(str(a) for a in data))
    return "\n".join(lines) + "\n"


def lp_file(lp: LPInstance) -> InstanceFile:
    return InstanceFile("lp", lp.m, lp.n, {"A": lp.A, "b": lp.b, "c": lp.c})


def outcome_file(lp: LPInstance, o: LPOutcome) -> InstanceFile:
    if isinstance(o, OptimalPair):
        sec = {"x": o.x, "y": o.y, "value": (o.value,)}
    elif isinstance(o, InfeasibilityCert):
        sec = {"z": o.z}
        if o.dual_ray is not None:
            sec["w_dual"] = o.dual_ray
    else:
        sec = {"w": o.w}
        if o.feasible_witness is not None:
            sec["witness"] = o.feasible_witness
    return InstanceFile("outcome", lp.m, lp.n, sec, o.kind)


def game_solution_file(sol: GameSolution) -> InstanceFile:
    return InstanceFile("game-solution", len(sol.p), len(sol.q),
                        {"value": (sol.value,), "p": sol.p.probs, "q": sol.q.probs})

