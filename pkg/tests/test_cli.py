from __future__ import annotations

import json

from a1stable import A1, make
from a1stable.gf2 import BitMatrix
from a1stable.module import GradedModule
from a1stable.cli import main
from a1stable.serialize import dumps, load, loads


def _dims(m, lo, hi):
    return [m.dim(d) for d in range(lo, hi + 1)]


def test_emit_ascii(capsys):
    assert main(["emit", "P2", "--max-degree", "12", "--format", "ascii"]) == 0
    out = capsys.readouterr().out
    assert "P2 over A1" in out and "Sq1->" in out


def test_emit_json_round_trip(capsys):
    assert main(["emit", "J", "--format", "json"]) == 0
    text = capsys.readouterr().out
    assert dumps(loads(text)) == text
    assert json.loads(text)["provenance"]["command"] == "emit"


def test_emit_fseq(capsys):
    assert main(["emit", "Fseq:1", "--format", "json"]) == 0
    m = loads(capsys.readouterr().out)
    assert (m.lo, m.dims) == (2, [1, 1, 1, 2, 1, 1, 1])


def test_emit_dot(capsys):
    assert main(["emit", "M1", "--format", "dot"]) == 0
    assert capsys.readouterr().out.startswith("digraph")


def test_tensor_then_reduce(tmp_path):
    t = tmp_path / "pp.json"
    r = tmp_path / "red.json"
    assert main(["apply", "tensor", "P1", "P1", "--max-degree", "30", "--out", str(t)]) == 0
    assert main(["apply", "reduce", str(t), "--out", str(r)]) == 0
    red = load(r)
    top = red.trusted[1]
    assert top >= 20
    assert _dims(red, -2, top) == _dims(make("P2"), -2, top)
    prov = json.loads(r.read_text())["provenance"]
    assert prov["op"] == "reduce" and prov["trusted"] == list(red.trusted)


def test_loops_r(tmp_path):
    out = tmp_path / "lr.json"
    assert main(["apply", "loops", "R", "--max-degree", "30", "--out", str(out)]) == 0
    m = load(out)
    assert _dims(m, -2, m.trusted[1]) == _dims(make("R", suspension=1), -2, m.trusted[1])


def test_localize1_f2(tmp_path):
    out = tmp_path / "l1.json"
    assert main(["apply", "localize1", "F2", "--out", str(out)]) == 0
    m = load(out)
    assert _dims(m, -2, 24) == _dims(make("P0"), -2, 24)


def test_suspension_syntax_and_ext(capsys):
    assert main(["analyze", "ext", "P0", "--other", "Sigma^1(R)", "--max-degree", "30"]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 1


def test_analyze_margolis_and_classify(capsys):
    assert main(["analyze", "margolis", "P1", "--k", "1", "--max-degree", "20"]) == 0
    h = json.loads(capsys.readouterr().out)["homology"][0]
    assert [d for d, x in zip(h["degrees"], h["dims"]) if x] == [2]
    assert main(["analyze", "classify", "P2"]) == 0
    assert json.loads(capsys.readouterr().out)["class"]["n"] == 2


def test_analyze_split(capsys):
    assert main(["analyze", "split", "B_regular"]) == 0
    assert json.loads(capsys.readouterr().out)["free_generator_degrees"] == [0]


def test_resolve(capsys):
    assert main(["resolve", "F2", "--algebra", "E1", "--stages", "3"]) == 0
    stages = json.loads(capsys.readouterr().out)["stages"]
    assert [len(s["generator_degrees"]) for s in stages] == [1, 2, 3, 4]


def test_verify_picard(capsys):
    assert main(["verify", "picard", "--format", "ascii"]) == 0
    out = capsys.readouterr().out
    assert "[[1, 1], [1, 3]]" in out and "Z/4" in out


def test_verify_json(capsys):
    assert main(["verify", "idempotents", "--seed", "3"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["status"] == "pass" and rep["seed"] == 3


def test_usage_errors(capsys):
    assert main(["emit", "Q7"]) == 2
    assert main(["bogus"]) == 2
    assert main(["apply", "tensor", "P1"]) == 2
    assert main(["emit", "P1", "--min-degree", "5", "--max-degree", "1"]) == 2
    assert main(["analyze", "ext", "P0"]) == 2


def test_computation_errors_exit_one(capsys):
    assert main(["analyze", "classify", "J", "--k", "0"]) == 1
    assert "error" in capsys.readouterr().err


def test_invalid_input_file(tmp_path, capsys):
    one = BitMatrix.identity(1)
    bad = GradedModule(A1, 0, [1, 1, 1], {"Sq1": {0: one, 1: one}})
    path = tmp_path / "bad.json"
    path.write_text(dumps(bad))
    assert main(["apply", "loops", str(path)]) == 1
    assert "fails validation" in capsys.readouterr().err
