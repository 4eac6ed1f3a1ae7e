"""Command-line front end.

Exit codes: 0 optimal/solved/verified, 1 claim rejected by ``verify``,
2 input or precondition error, 10 infeasible, 11 unbounded,
12 hole in the classic skew-symmetric extraction.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .assignment import (
    check_hide_and_seek_value,
    hide_and_seek,
    max_weight_matchings,
    verify_matching_strategies,
)
from .dantzig import Hole, extract_classic, extract_positive, solve_dantzig_strategy
from .exact_math import DimensionError, PreconditionError, Vec, fmt_rat
from .games import GameSolution, solve_game, verify_maximin
from .instance_io import ParseError, parse_instance
from .lp import (
    InfeasibilityCert,
    LPInstance,
    LPOutcome,
    OptimalPair,
    Verification,
    solve_lp,
    verify_outcome,
)
from .nonneg import solve_nonneg_lp
from .reduction import degree_of_feasibility, interpret_degree, scale_lp, solve_positive_lp

EXIT_CODES = {"optimal": 0, "solved": 0, "verified": 0, "rejected": 1,
              "infeasible": 10, "unbounded": 11, "hole": 12}
EXIT_INPUT_ERROR = 2


@dataclass
class Report:
    command: str
    outcome: str
    scalars: Dict[str, Fraction] = field(default_factory=dict)
    vectors: Dict[str, Vec] = field(default_factory=dict)
    checks: Verification = Verification(())
    notes: List[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.outcome]

    def to_json(self) -> str:
        return json.dumps({
            "command": self.command,
            "outcome": self.outcome,
            "exit_code": self.exit_code,
            "scalars": {k: str(v) for k, v in self.scalars.items()},
            "vectors": {k: [str(a) for a in v] for k, v in self.vectors.items()},
            "checks": [{"label": c.label, "passed": c.passed, "detail": c.detail} for c in self.checks.checks],
            "notes": self.notes,
        }, indent=2)

    def to_text(self) -> str:
        lines = [f"command: {self.command}", f"outcome: {self.outcome}"]
        for k, v in self.scalars.items():
            lines.append(f"{k} = {fmt_rat(v, decimals=True)}")
        for k, v in self.vectors.items():
            lines.append(f"{k} = (" + ", ".join(str(a) for a in v) + ")")
        if self.checks.checks:
            lines.append("checks:")
            for c in self.checks.checks:
                mark = "ok  " if c.passed else "FAIL"
                lines.append(f"  [{mark}] {c.label}" + (f"  {c.detail}" if c.detail else ""))
        lines += [f"note: {n}" for n in self.notes]
        return "\n".join(lines)


def outcome_report(command: str, lp: LPInstance, out: LPOutcome) -> Report:
    checks = verify_outcome(lp, out)
    if not checks:
        raise AssertionError(f"refusing to emit an unverified certificate: {checks.violations}")
    rep = Report(command, out.kind, checks=checks)
    if isinstance(out, OptimalPair):
        rep.scalars["value"] = out.value
        rep.vectors.update(x=out.x, y=out.y)
    elif isinstance(out, InfeasibilityCert):
        rep.vectors["z"] = out.z
        if out.dual_ray is not None:
            rep.vectors["w_dual"] = out.dual_ray
            rep.notes.append("the dual is infeasible as well")
    else:
        rep.vectors["w"] = out.w
        if out.feasible_witness is not None:
            rep.vectors["witness"] = out.feasible_witness
    return rep


def _read(path: str):
    if path == "-":
        return parse_instance(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def cmd_solve_lp(args) -> Report:
    lp = _read(args.instance).to_lp()
    return outcome_report("solve-lp", lp, solve_lp(lp))


def cmd_solve_positive(args) -> Report:
    lp = _read(args.instance).to_lp()
    out = solve_positive_lp(lp)
    rep = outcome_report("solve-positive", lp, out)
    value = degree_of_feasibility(scale_lp(lp))
    rep.scalars["game_value"] = value
    rep.notes.append(interpret_degree(value))
    return rep


def cmd_solve_nonneg(args) -> Report:
    lp = _read(args.instance).to_lp()
    rep = outcome_report("solve-nonneg", lp, solve_nonneg_lp(lp, engine=args.engine))
    rep.notes.append(f"engine: {args.engine}")
    return rep


def _game_report(command: str, g, sol: GameSolution) -> Report:
    checks = verify_maximin(g, sol)
    assert checks, checks.violations
    return Report(command, "solved", {"value": sol.value}, {"p": sol.p.probs, "q": sol.q.probs}, checks)


def cmd_solve_game(args) -> Report:
    g = _read(args.instance).to_game()
    return _game_report("solve-game", g, solve_game(g))


def cmd_dantzig(args) -> Report:
    lp = _read(args.instance).to_lp()
    s = solve_dantzig_strategy(lp)
    out = extract_classic(lp, s) if args.classic else extract_positive(lp, s)
    if isinstance(out, Hole):
        rep = Report("dantzig", "hole", {"t": s.t, "gap": s.gap(lp)}, {"p": s.p, "q": s.q})
        rep.notes.append("t = 0 and b^T p = c^T q: the classic extraction yields no answer")
        return rep
    rep = outcome_report("dantzig", lp, out)
    rep.scalars["t"] = s.t
    rep.vectors.update(p=s.p, q=s.q)
    return rep


def cmd_hide_and_seek(args) -> Report:
    a = _read(args.instance).to_assignment()
    res = check_hide_and_seek_value(a)
    _, best = max_weight_matchings(a)
    checks = verify_matching_strategies(a) + verify_maximin(hide_and_seek(a).game, res.solution)
    rep = Report("hide-and-seek", "solved" if res.holds else "rejected",
                 {"game_value": res.game_value, "matching_weight": res.matching_weight},
                 {"p": res.solution.p.probs, "q": res.solution.q.probs}, checks)
    rep.notes.append("value == 1/weight" if res.holds else "value != 1/weight")
    rep.notes += ["optimal matching: " + " ".join(f"{i}->{j}" for i, j in enumerate(s)) for s in best]
    return rep


def cmd_verify(args) -> Report:
    inst = _read(args.instance)
    claim = _read(args.claim)
    if inst.kind == "lp":
        checks = verify_outcome(inst.to_lp(), claim.to_outcome())
    elif inst.kind == "game":
        checks = verify_maximin(inst.to_game(), claim.to_game_solution())
    else:
        raise ParseError(f"verify accepts lp or game instances, got {inst.kind!r}")
    return Report("verify", "verified" if checks else "rejected", checks=checks)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "structured"), default="text",
                        help="structured emits JSON")
    parser = argparse.ArgumentParser(prog="minimax-lp", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("instance", help="instance file, or - for stdin")
        p.set_defaults(func=func)
        return p

    add("solve-lp", cmd_solve_lp, "exact simplex with certificates")
    add("solve-positive", cmd_solve_positive, "scaled game reduction (b > 0, c > 0)")
    p = add("solve-nonneg", cmd_solve_nonneg, "pre/post-processed reduction (A >= 0)")
    p.add_argument("--engine", choices=("vn", "dantzig"), default="vn")
    add("solve-game", cmd_solve_game, "exact value and maximin strategies")
    p = add("dantzig", cmd_dantzig, "skew-symmetric reduction")
    p.add_argument("--classic", action="store_true",
                   help="classic extraction that may report a hole (default needs b, c > 0)")
    add("hide-and-seek", cmd_hide_and_seek, "assignment problem as a hide-and-seek game")
    p = add("verify", cmd_verify, "check a claimed outcome or game solution")
    p.add_argument("claim", help="outcome or game-solution file")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report = args.func(args)
    except (ParseError, PreconditionError, DimensionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    print(report.to_json() if args.format == "structured" else report.to_text())
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
