"""Command line behaviour, exit codes, file outputs."""

import json
import subprocess
import sys

import pytest

from weylcells import from_json
from weylcells.cli import main


def run(*argv):
    return main(list(argv))


def test_automaton_text(capsys):
    assert run("automaton", "--type", "A", "--rank", "2", "--N", "0") == 0
    out = capsys.readouterr().out
    lines = out.strip().splitlines()
    assert lines[0] == "states,16"
    assert lines[1] == "length,count"
    assert lines[2] == "0,1" and lines[3] == "1,3"
    assert len(lines) == 13  # lengths 0..10


def test_automaton_json_round_trip(capsys):
    assert run(
        "automaton", "--type", "C", "--rank", "2", "--N", "1", "--format", "json"
    ) == 0
    aut = from_json(capsys.readouterr().out)
    assert aut.n_states == 81
    assert aut.alphabet_size == 3


def test_automaton_dot_and_out_file(tmp_path, capsys):
    out = tmp_path / "aut.dot"
    assert run(
        "automaton", "--type", "A", "--rank", "1", "--format", "dot",
        "--out", str(out),
    ) == 0
    assert capsys.readouterr().out == ""
    assert out.read_text().startswith("digraph")


def test_accept_and_reject(capsys):
    assert run("accept", "--type", "A", "--rank", "2", "0", "1", "0") == 0
    assert capsys.readouterr().out.strip() == "accept"
    assert run("accept", "--type", "A", "--rank", "2", "0", "0") == 1
    assert capsys.readouterr().out.strip() == "reject"
    # the empty word is reduced
    assert run("accept", "--type", "A", "--rank", "2") == 0


@pytest.mark.parametrize(
    "argv",
    [
        ("automaton", "--type", "X", "--rank", "2"),
        ("automaton", "--type", "A", "--rank", "2", "--N", "1",
         "--nu-preset", "short0long1"),
        ("automaton", "--type", "A", "--rank", "2", "--N", "-1"),
        ("automaton", "--type", "A", "--rank", "2", "--nu-preset", "banana"),
        ("automaton", "--type", "D", "--rank", "3"),
        ("accept", "--type", "A", "--rank", "2", "5"),
        ("cells", "--type", "A", "--rank", "2", "--max-len", "8",
         "--stability-len", "8"),
        ("svg", "--type", "C", "--rank", "3", "--out", "/tmp/never.svg"),
    ],
)
def test_usage_errors(argv, capsys):
    assert run(*argv) == 2
    assert "error:" in capsys.readouterr().err


def test_cells_text_report(capsys):
    code = run(
        "cells", "--type", "A", "--rank", "2",
        "--max-len", "8", "--stability-len", "10",
    )
    captured = capsys.readouterr()
    assert code == 0  # every class either stable or silently frontier-bound
    lines = captured.out.strip().splitlines()
    assert lines[0] == "label,size_in_ball,n_regions,exact,stable"
    assert lines[1].startswith("e,1,1,true,true")
    stable_rows = [l for l in lines[1:] if l.endswith(",true")]
    assert len(stable_rows) == 10


def test_cells_unstable_exit_code(capsys):
    argv = [
        "cells", "--type", "G", "--rank", "2", "--N", "1",
        "--max-len", "10", "--stability-len", "12",
    ]
    assert main(argv) == 1
    err = capsys.readouterr().err
    assert "unstable:" in err
    assert main(argv + ["--allow-unstable"]) == 0


def test_cells_out_writes_report_and_figure(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(
        "cells", "--type", "C", "--rank", "2", "--nu-preset", "short0long1",
        "--max-len", "8", "--stability-len", "10", "--format", "json",
        "--out", str(out),
    )
    captured = capsys.readouterr()
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["type"] == "C" and doc["N_or_nu"] == "short0long1"
    figure = tmp_path / "report.svg"
    assert figure.exists()
    assert f"figure: {figure}" in captured.err
    assert 'viewBox="0 0 1000 1000"' in figure.read_text()


def test_svg_command_is_deterministic(tmp_path, capsys):
    one = tmp_path / "one.svg"
    two = tmp_path / "two.svg"
    for out in (one, two):
        assert run(
            "svg", "--type", "G", "--rank", "2", "--N", "1",
            "--max-len", "4", "--out", str(out),
        ) == 0
    assert one.read_bytes() == two.read_bytes()
    assert "24 lines" in capsys.readouterr().out


def test_svg_with_colouring(tmp_path, capsys):
    out = tmp_path / "cells.svg"
    assert run(
        "svg", "--type", "A", "--rank", "2", "--max-len", "4",
        "--stability-len", "8", "--out", str(out),
    ) == 0
    # shallow cross-check radius: only classes stable at (4, 8) get paint
    assert "31 alcoves, 22 coloured" in capsys.readouterr().out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "weylcells", "accept",
         "--type", "A", "--rank", "2", "0", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "accept"
