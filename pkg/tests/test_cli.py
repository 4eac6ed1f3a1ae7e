import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from minimax_lp.cli import EXIT_CODES, main
from minimax_lp.instance_io import lp_file, serialize
from minimax_lp.lp import solve_lp

from conftest import lp_instances

ONE_DIM = "kind lp\nm 1\nn 1\nA\n1\nb\n2\nc\n3\n"
ZERO_DATA = "kind lp\nm 2\nn 2\nA\n1 2\n3 0\nb\n0 0\nc\n0 0\n"
INFEASIBLE = "kind lp\nm 1\nn 1\nA\n1\nb\n-1\nc\n1\n"
UNBOUNDED = "kind lp\nm 1\nn 1\nA\n-1\nb\n1\nc\n1\n"
PENNIES = "kind game\nm 2\nn 2\nM\n1 -1\n-1 1\n"
ASSIGNMENT = "kind assignment\nn 2\nmu\n2 1\n1 2\n"


@pytest.fixture
def run(tmp_path, capsys):
    def _run(*args, files=()):
        paths = []
        for k, text in enumerate(files):
            p = tmp_path / f"in{k}.txt"
            p.write_text(text)
            paths.append(str(p))
        code = main([*args, *paths])
        out = capsys.readouterr()
        return code, out.out, out.err
    return _run


def structured(out):
    return json.loads(out)


def test_solve_positive(run):
    code, out, _ = run("solve-positive", "--format", "structured", files=[ONE_DIM])
    rep = structured(out)
    assert code == 0
    assert rep["scalars"] == {"value": "6", "game_value": "1/6"}
    assert rep["vectors"] == {"x": ["2"], "y": ["3"]}
    assert all(c["passed"] for c in rep["checks"])


def test_dantzig_classic_hole(run):
    code, out, _ = run("dantzig", "--classic", files=[ZERO_DATA])
    assert code == 12 and "outcome: hole" in out


def test_dantzig_default(run):
    code, out, _ = run("dantzig", "--format", "structured", files=[ONE_DIM])
    assert code == 0 and structured(out)["scalars"]["t"] == "1/6"


def test_solve_nonneg_infeasible(run):
    code, out, _ = run("solve-nonneg", "--format", "structured", files=[INFEASIBLE])
    assert code == 10 and structured(out)["vectors"]["z"] == ["1"]


@pytest.mark.parametrize("engine", ["vn", "dantzig"])
def test_solve_nonneg_engines(run, engine):
    code, out, _ = run("solve-nonneg", "--engine", engine, files=[ZERO_DATA])
    assert code == 0 and f"engine: {engine}" in out


def test_solve_lp_unbounded(run):
    code, out, _ = run("solve-lp", files=[UNBOUNDED])
    assert code == 11 and "w = (1)" in out


def test_solve_game_text(run):
    code, out, _ = run("solve-game", files=[PENNIES])
    assert code == 0 and "value = 0" in out and "p = (1/2, 1/2)" in out


def test_hide_and_seek(run):
    code, out, _ = run("hide-and-seek", "--format", "structured", files=[ASSIGNMENT])
    rep = structured(out)
    assert code == 0
    assert rep["scalars"] == {"game_value": "1/4", "matching_weight": "4"}
    assert "optimal matching: 0->0 1->1" in rep["notes"]


def test_verify_accepts_and_rejects(run):
    good = "kind outcome\nstatus optimal\nm 1\nn 1\nx\n2\ny\n3\nvalue\n6\n"
    bad = good.replace("value\n6", "value\n7")
    code, out, _ = run("verify", files=[ONE_DIM, good])
    assert code == 0 and "outcome: verified" in out
    code, out, _ = run("verify", "--format", "structured", files=[ONE_DIM, bad])
    assert code == 1
    failed = [c["label"] for c in structured(out)["checks"] if not c["passed"]]
    assert failed == ["c^T x == value", "b^T y == value"]


def test_verify_game_solution(run):
    claim = "kind game-solution\nm 2\nn 2\nvalue\n0\np\n1/2 1/2\nq\n1/2 1/2\n"
    assert run("verify", files=[PENNIES, claim])[0] == 0


@pytest.mark.parametrize("args,files", [
    (("solve-positive",), [INFEASIBLE]),
    (("solve-nonneg",), [UNBOUNDED]),
    (("solve-lp",), ["kind lp\nm 1\nn 1\nA\n1/0\nb\n1\nc\n1\n"]),
    (("solve-game",), [ONE_DIM]),
    (("verify",), [ASSIGNMENT, ASSIGNMENT]),
])
def test_input_errors_exit_2(run, args, files):
    code, out, err = run(*args, files=files)
    assert code == 2 and err.startswith("error:") and out == ""


def test_missing_file(run):
    code, _, err = run("solve-lp", "/nonexistent/instance.txt")
    assert code == 2 and "error" in err


def test_parse_error_reports_line(run):
    code, _, err = run("solve-lp", files=["kind lp\nm 1\nn 1\nA\nx1\n"])
    assert code == 2 and "line 5" in err


@settings(max_examples=40, deadline=None)
@given(lp_instances())
def test_exit_code_depends_only_on_outcome(tmp_path_factory, lp):
    path = tmp_path_factory.mktemp("cli") / "lp.txt"
    path.write_text(serialize(lp_file(lp)))
    code = main(["solve-lp", "--format", "structured", str(path)])
    assert code == EXIT_CODES[solve_lp(lp).kind]


def test_module_entry_point(tmp_path):
    p = tmp_path / "lp.txt"
    p.write_text(ONE_DIM)
    proc = subprocess.run([sys.executable, "-m", "minimax_lp", "solve-lp", str(p)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "value = 6" in proc.stdout
