from __future__ import annotations

import json
import os
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from symbreak import constructions as c
from symbreak.cli import run
from symbreak.formats import to_adjacency_text, to_graph6


def _schema(name: str) -> dict:
    return json.loads(resources.files("symbreak").joinpath(f"schemas/{name}.schema.json").read_text())


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_dnum_k5_graph6(tmp_path, capsys):
    path = tmp_path / "k5.g6"
    path.write_text("D~{\n")
    code, out, _ = _run(capsys, "dnum", "--input", str(path))
    assert code == 0
    assert out.splitlines() == ["D=5", "D'=3"]


def test_dnum_json(capsys):
    code, out, _ = _run(capsys, "dnum", "--family", "petersen", "--output", "json")
    info = json.loads(out)
    jsonschema.validate(info, _schema("dnum"))
    assert (code, info["D"], info["D_index"]) == (0, 3, 2)


def test_analyze_wreath(capsys):
    code, out, _ = _run(capsys, "analyze", "--family", "wreath:5")
    assert code == 0
    assert out.splitlines()[0] == "arc-transitive, locally D4, girth 4, |Aut|=320"


@pytest.mark.parametrize("family", ["wreath:5", "K5", "Holt", "petersen", "path:4", "C13(1,5)"])
def test_analyze_json_schema(capsys, family):
    code, out, _ = _run(capsys, "analyze", "--family", family, "--output", "json")
    assert code == 0
    jsonschema.validate(json.loads(out), _schema("analysis"))


@pytest.mark.parametrize("family", ["K5", "W6", "cage46", "C13(1,5)", "Holt"])
def test_colour_json_schema(capsys, family):
    code, out, _ = _run(capsys, "colour", "--family", family, "--output", "json")
    assert code == 0
    cert = json.loads(out)
    jsonschema.validate(cert, _schema("certificate"))
    assert cert["verified"] == (cert["exceptional"] is None)


def test_colour_table(capsys):
    code, out, _ = _run(capsys, "colour", "--family", "circulant:11,1,3")
    assert code == 0
    assert "distinguishing 2-colouring (verified)" in out and "branch: type2.single_cycle" in out


def test_colour_adjacency_input(tmp_path, capsys):
    path = tmp_path / "c9.txt"
    path.write_text(to_adjacency_text(c.circulant(9, [1, 2])))
    code, out, _ = _run(capsys, "colour", "--input", str(path), "--output", "json")
    assert code == 0 and json.loads(out)["D"] == 2


def test_generate(capsys):
    code, out, _ = _run(capsys, "generate", "--family", "wreath:5")
    assert (code, out.strip()) == (0, to_graph6(c.wreath(5)))
    code, out, _ = _run(capsys, "generate", "--list")
    assert code == 0 and "wreath" in out.split() and "cage46" in out.split()


def test_output_is_deterministic(capsys):
    first = _run(capsys, "colour", "--family", "Cay(S4;2,6,8,10)", "--output", "json")
    second = _run(capsys, "colour", "--family", "Cay(S4;2,6,8,10)", "--output", "json")
    assert first == second


@pytest.mark.parametrize("argv", [
    ["colour", "--family", "nosuch:3"],
    ["colour", "--family", "petersen"],
    ["colour", "--family", "K5", "--input", "x"],
    ["colour"],
    ["dnum", "--family", "K5", "--budget", "10"],
    ["analyze", "--input", "/nonexistent/file"],
    ["generate"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = _run(capsys, *argv)
    assert code == 2


def test_budget_exhaustion_exits_3(capsys):
    code, _, err = _run(capsys, "dnum", "--family", "hypercube:6", "--budget", "10000")
    assert code == 3 and "budget" in err
    assert "SYMBREAK_BUDGET" not in os.environ


def test_census_custom_input(tmp_path, capsys):
    path = tmp_path / "cat.g6"
    path.write_text("\n".join(to_graph6(g) for g in (c.complete(5), c.circulant(9, [1, 2]), c.path(3))) + "\n")
    code, out, _ = _run(capsys, "census", "--input", str(path), "--output", "json")
    assert code == 0
    lines = [json.loads(line) for line in out.splitlines()]
    for line in lines:
        jsonschema.validate(line, _schema("census"))
    assert lines[-1]["summary"]["counts"] == {"ok": 2, "skipped": 1}


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "symbreak.cli", "dnum", "--family", "K5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("D=5")
