import io
import subprocess
import sys
from pathlib import Path

import pytest

from hyperpebble.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


@pytest.mark.parametrize("name, argv, code", [
    ("decide_triangle", ["decide", "triangle.txt"], 0),
    ("decide_triangle_machine", ["decide", "triangle.txt", "--machine"], 0),
    ("decide_doubled", ["decide", "triangle_doubled.txt", "--machine"], 1),
    ("extract_doubled", ["extract", "triangle_doubled.txt"], 0),
    ("optimize_k4", ["optimize", "k4_weighted.txt"], 0),
    ("components_tree3", ["components", "tree3.txt"], 0),
    ("components_tree3_machine", ["components", "tree3.txt", "--machine"], 0),
    ("represent_tree3", ["represent", "tree3.txt"], 0),
    ("critical_tree3", ["critical", "tree3.txt"], 0),
    ("decompose_two_maps", ["decompose", "--maps", "2", "two_maps.txt"], 0),
    ("verify_tree3", ["verify-mt", "tree3.txt", "--parts", "tree3.parts"], 0),
    ("check_laman", ["check", "--theorem", "lovasz-recski", "k4_laman.txt", "--machine"], 0),
    ("check_maps", ["check", "--theorem", "maps-adding", "k4_laman.txt", "--machine"], 0),
    ("oracle_components", ["oracle", "--check", "components", "triangle.txt"], 0),
])
def test_golden_outputs(name, argv, code, monkeypatch):
    monkeypatch.chdir(DATA)
    got_code, got = run(*argv)
    assert got_code == code
    assert got == (GOLDEN / f"{name}.out").read_text()


def test_dependent_plain_output_and_exit(monkeypatch):
    monkeypatch.chdir(DATA)
    assert run("decide", "triangle.txt", "--k", 1, "--l", 5) == (1, "dependent\n")


def test_counterexample_exits_1(monkeypatch):
    monkeypatch.chdir(DATA)
    code, out = run("check", "--theorem", "maps-adding", "k3_edge_2_5.txt")
    assert code == 1
    lines = out.splitlines()
    assert lines[0] == "FAIL: 375 augmentations, 24 counterexamples"
    assert "counterexample=0,0,1,1,0 1" in lines


def test_trace_goes_to_stderr(monkeypatch, capsys):
    monkeypatch.chdir(DATA)
    code, out = run("decide", "triangle.txt", "--k", 2, "--l", 3, "--trace")
    assert (code, out) == (0, "tight\n")
    assert capsys.readouterr().err.splitlines() == [
        "add e=0,1 t=0", "add e=1,2 t=1", "shift e=0 t=1", "add e=0,2 t=0"]


@pytest.mark.parametrize("argv, message", [
    (["decide", "missing.txt"], "error: No such file or directory: missing.txt"),
    (["decide", "triangle.txt", "--bogus"], "error: unrecognized arguments: --bogus"),
    (["decide", "bad.txt"], "error: line 2: bad vertex id 'x'"),
    (["check", "--theorem", "lovasz-recski", "k4_weighted.txt"], "error:"),
    (["decompose", "--maps", "2", "triangle.txt"], "error:"),
])
def test_errors_exit_2(argv, message, tmp_path, monkeypatch, capsys):
    for name in ("triangle.txt", "k4_weighted.txt"):
        (tmp_path / name).write_text((DATA / name).read_text())
    (tmp_path / "bad.txt").write_text("3 1 0\n0 x\n")
    monkeypatch.chdir(tmp_path)
    code, out = run(*argv)
    assert code == 2 and out == ""
    assert capsys.readouterr().err.startswith(message)


def test_generate_is_seeded_and_tight():
    code, a = run("generate", "--family", "tight", "--n", 5, "--s", 2, "--k", 2, "--l", 3,
                  "--seed", 1)
    assert code == 0 and a == run("generate", "--family", "tight", "--n", 5, "--s", 2,
                                  "--k", 2, "--l", 3, "--seed", 1)[1]
    assert a.splitlines()[0] == "5 2 3" and len(a.splitlines()) == 8


def test_generated_output_round_trips(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text(run("generate", "--family", "tight", "--n", 6, "--s", 3, "--k", 2,
                        "--l", 4, "--seed", 2)[1])
    assert run("decide", path) == (0, "tight\n")


def test_module_entry_point_reads_stdin():
    proc = subprocess.run([sys.executable, "-m", "hyperpebble", "decide", "-"],
                          input=(DATA / "triangle.txt").read_text(),
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout == "tight\n"
