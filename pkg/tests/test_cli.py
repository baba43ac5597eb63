from __future__ import annotations

import argparse
import io
import json
from dataclasses import replace

import pytest

from lpasr import cli
from lpasr.families import CORPUS


def run(capsys, *argv, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_report_loop(capsys):
    code, out, _ = run(capsys, "report", "--family", "loop", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["schema"] == 1
    assert doc["rank"]["sr"] == "2" and doc["cstar"] == "1" and doc["k0"]["free_rank"] == 1


def test_report_line_and_rose(capsys):
    assert json.loads(run(capsys, "report", "--family", "line(5)", "--json")[1])["rank"]["sr"] == "1"
    doc = json.loads(run(capsys, "report", "--family", "rose(3)", "--json")[1])
    assert doc["rank"]["sr"] == "inf" and doc["k0"]["torsion"] == [2]


def test_report_table(capsys):
    code, out, _ = run(capsys, "report", "--family", "chain3")
    assert code == 0 and "sr(L(E))" in out and "sr = 2" in out


def test_file_and_stdin_input(capsys, tmp_path, monkeypatch):
    path = tmp_path / "g.txt"
    path.write_text("vertices: v\nedge e: v -> v\n")
    code, out, _ = run(capsys, "sr", str(path), "--json")
    assert code == 0 and json.loads(out)["sr"] == "2"
    code, out, _ = run(capsys, "sr", "--json", stdin='{"vertices": ["v"], "edges": '
                       '[{"id": "e", "src": "v", "dst": "v", "mult": 2}]}', monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out)["sr"] == "inf"


def test_parse_error_exit_2(capsys, monkeypatch):
    code, _, err = run(capsys, "report", stdin="vertices: a\nedge a -> b\n", monkeypatch=monkeypatch)
    assert code == 2 and "line 2" in err
    assert run(capsys, "report", "/nonexistent/graph.txt")[0] == 2
    assert run(capsys, "generate", "rose(0)")[0] == 2
    assert run(capsys, "quotient", "--family", "line(3)", "--set", "v3")[0] == 2
    assert run(capsys, "laurent-check", "1+", "z")[0] == 2


def test_inconclusive_exit_3(capsys):
    code, _, err = run(capsys, "sr", "--family", "chain3", "--cap", "2")
    assert code == 3 and "inconclusive" in err


def test_corpus_passes(capsys):
    code, out, _ = run(capsys, "corpus")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "corpus", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["schema"] == 1


def test_corpus_detects_corruption(capsys):
    bad = replace(CORPUS[0], expected={**CORPUS[0].expected, "sr": "2"})
    code = cli.cmd_corpus(argparse.Namespace(json=False), entries=(bad,) + CORPUS[1:])
    out = capsys.readouterr().out
    assert code == 1 and "FAIL" in out


def test_fuzz(capsys):
    code, out, _ = run(capsys, "fuzz", "--count", "30", "--seed", "7", "--json")
    assert code == 0 and json.loads(out)["count"] == 30
    assert run(capsys, "fuzz", "--max-vertices", "9")[0] == 2


def test_fuzz_reports_counterexample(capsys, monkeypatch):
    from lpasr import invariants

    def broken(g):
        assert len(g.vertices) < 3, "planted failure"

    monkeypatch.setattr(invariants, "INVARIANTS", (invariants.Invariant("planted", broken),))
    code, out, _ = run(capsys, "fuzz", "--count", "50", "--seed", "0")
    assert code == 1 and "planted" in out and "vertices:" in out


def test_graph_commands(capsys):
    code, out, _ = run(capsys, "quotient", "--family", "chain3", "--set", "v1,v2")
    assert code == 0 and out.startswith("vertices: v3")
    code, out, _ = run(capsys, "restrict", "--family", "chain3", "--set", "v1", "--json")
    assert json.loads(out)["graph"]["vertices"] == ["v1"]
    code, out, _ = run(capsys, "quotient", "--family", "chain3", "--set", "")
    assert code == 0 and out.count("edge") == 6
    code, out, _ = run(capsys, "lattice", "--family", "chain3", "--json")
    assert json.loads(out)["elements"] == [[], ["v1"], ["v1", "v2"], ["v1", "v2", "v3"]]


def test_ideal_graph_command(capsys, monkeypatch):
    code, out, _ = run(capsys, "ideal-graph", "--family", "chain3", "--set", "v1", "--json")
    assert code == 0 and json.loads(out)["cycle"] == ["b1"]
    code, out, _ = run(capsys, "ideal-graph", "--set", "b", "--hereditary-only",
                       stdin="vertices: a b\nedge e: a -> b\n", monkeypatch=monkeypatch)
    assert code == 0 and "edge bar[e]: path[e] -> b" in out


def test_csp_command(capsys, monkeypatch):
    code, out, _ = run(capsys, "csp", "--family", "chain3", "--vertex", "v2", "--json")
    assert json.loads(out)["paths"] == [["b1"], ["b2"]]
    code, out, err = run(capsys, "csp", "--vertex", "v", "--json",
                         stdin="vertices: v w\nedge a: v -> w\nedge b: w -> w\nedge c: w -> v\n",
                         monkeypatch=monkeypatch)
    doc = json.loads(out)
    assert code == 0 and doc["infinite"] and ["a", "b", "c"] in doc["paths"] and "infinitely" in err
    assert run(capsys, "csp", "--family", "loop", "--vertex", "zz")[0] == 2


def test_laurent_check(capsys):
    code, out, _ = run(capsys, "laurent-check", "1+z", "1+z^2", "--json")
    doc = json.loads(out)
    assert code == 0
    assert doc["bezout"] == {"a": "1/2 - 1/2*z", "b": "1/2"}
    assert doc["reduction"]["verdict"] == "irreducible" and doc["reduction"]["verified"]
    assert doc["reduction"]["proof"]["period"] == 4
    code, out, _ = run(capsys, "laurent-check", "1+z", "2+z")
    assert "reducible" in out


def test_k0_and_generate(capsys):
    code, out, _ = run(capsys, "k0", "--family", "mult2", "--json")
    doc = json.loads(out)
    assert doc["torsion"] == [2] and doc["free_rank"] == 1 and doc["one_free_gcd"] == 1
    code, out, _ = run(capsys, "generate", "enm(2,3)")
    assert out.startswith("vertices: v1 v2 v3")


def test_deterministic(capsys):
    first = run(capsys, "fuzz", "--count", "20", "--seed", "11", "--json")[1]
    assert run(capsys, "fuzz", "--count", "20", "--seed", "11", "--json")[1] == first


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        cli.main([])
