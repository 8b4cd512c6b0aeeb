import json
import subprocess
import sys
from pathlib import Path

import pytest

from morphocat.cli import main

DATA = Path(__file__).resolve().parent.parent / "tutorials" / "data"


def D(name):
    return str(DATA / name)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_morph_erode_set(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "morph", "erode", "--ground", D("set.json"), "--se", D("line-se.json"),
                     "--object", D("set-123.json"), "--out", str(out))
    assert code == 0
    assert json.loads(out.read_text()) == {"elements": ["2"]}


def test_morph_dilate_p4_with_dot(tmp_path, capsys):
    dot = tmp_path / "r.dot"
    code, out, _ = run(capsys, "morph", "dilate", "--ground", D("p4.json"), "--se", D("closed-neighborhood.json"),
                       "--object", D("p4-b.json"), "--dot", str(dot), "--diff", D("p4-b.json"))
    assert code == 0
    r = json.loads(out)
    assert len(r["vertices"]) == 3 and len(r["edges"]) == 2
    text = dot.read_text()
    assert text.startswith('graph "morpho"') and "style=bold" in text and '"c" -- "d" [style=dotted' in text


@pytest.mark.parametrize("op", ["erode", "dilate", "open", "close"])
def test_morph_methods_agree_on_set(op, capsys):
    results = set()
    for method in ("generic", "fast", "paper-algorithm"):
        code, out, _ = run(capsys, "morph", op, "--ground", D("set.json"), "--se", D("line-se.json"),
                           "--object", D("set-04.json"), "--method", method)
        assert code == 0
        results.add(out)
    assert len(results) == 1


def test_morph_fast_without_closed_form(capsys):
    code, _, err = run(capsys, "morph", "open", "--ground", D("p4.json"), "--se", D("p4-full-se.json"),
                       "--object", D("p4-b.json"), "--method", "fast")
    assert code == 3 and "closed form" in err


def test_morph_paper_algorithm_on_p6(capsys):
    code, out, _ = run(capsys, "morph", "erode", "--ground", D("p6.json"), "--se", D("closed-neighborhood.json"),
                       "--object", D("p6-zxyw.json"), "--method", "paper-algorithm")
    assert code == 0 and json.loads(out) == {"vertices": ["x", "y"], "edges": []}


def test_laws(tmp_path, capsys):
    code, out, _ = run(capsys, "laws", "--ground", D("set.json"), "--se", D("line-se.json"))
    assert code == 0
    assert {r["status"] for r in json.loads(out)} == {"holds"}
    code, out, _ = run(capsys, "laws", "--ground", D("pair.json"), "--se", D("pair-asym-se.json"),
                       "--law", "boolean-duality")
    rep = json.loads(out)
    assert code == 1 and rep[0]["witness"]["d"] == {"elements": ["0"]}
    code, _, _ = run(capsys, "laws", "--ground", D("pair.json"), "--se", D("pair-sym-se.json"),
                     "--law", "boolean-duality")
    assert code == 0


def test_laws_reports_are_byte_identical(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p in paths:
        code, _, _ = run(capsys, "laws", "--ground", D("p4.json"), "--se", D("closed-neighborhood.json"),
                         "--samples", "40", "--seed", "7", "--report", str(p))
        assert code == 0
    assert paths[0].read_bytes() == paths[1].read_bytes()


def test_diverge(capsys):
    code, out, _ = run(capsys, "diverge", "--ground", D("p6.json"), "--se", D("closed-neighborhood.json"),
                       "--object", D("p6-zxyw.json"), "--op", "erode")
    assert code == 1
    case = json.loads(out)["cases"][0]
    eq = {tuple(a["methods"]): a["equal"] for a in case["agreement"]}
    assert eq[("generic", "paper_algorithm")] is False and eq[("generic", "closed_form")] is True
    code, out, _ = run(capsys, "diverge", "--ground", D("set.json"), "--se", D("line-se.json"))
    assert code == 0 and json.loads(out)["compared"] == 64
    code, out, _ = run(capsys, "diverge", "--ground", D("hypergraph.json"), "--se", D("hyperedge-star.json"),
                       "--object", D("hg-14.json"), "--op", "dilate")
    assert code == 1
    code, out, _ = run(capsys, "diverge", "--ground", D("p4.json"), "--se", D("closed-neighborhood.json"),
                       "--samples", "30", "--seed", "1", "--op", "erode", "--all")
    assert code == 0 and len(json.loads(out)["cases"]) == 30


def test_logic(capsys):
    code, out, _ = run(capsys, "logic", "eval", "--model", D("kripke.json"), "--formula", "[]p -> p")
    assert code == 0 and json.loads(out) == {"elements": ["q0", "q1"]}
    code, out, _ = run(capsys, "logic", "check", "--model", D("kripke-p-q0.json"), "--formula", "p -> []p")
    assert code == 1 and json.loads(out)["satisfied"] is False
    code, _, _ = run(capsys, "logic", "check", "--model", D("kripke.json"), "--formula", "[]p -> p")
    assert code == 0
    code, _, _ = run(capsys, "logic", "prove-check", "--bundled", "adjunction")
    assert code == 0
    code, _, _ = run(capsys, "logic", "prove-check", "--proof", D("proof-kripke-schema.json"))
    assert code == 0
    code, out, _ = run(capsys, "logic", "axioms", "--model", D("p4-model.json"))
    assert code == 0 and len(json.loads(out)) == 21


@pytest.mark.parametrize(
    "argv",
    [
        ["logic", "eval", "--model", "kripke.json", "--formula", "p ->"],
        ["morph", "erode", "--ground", "nope.json", "--se", "line-se.json", "--object", "set-123.json"],
        ["morph", "erode", "--ground", "p4.json", "--se", "line-se.json", "--object", "p4-b.json"],
        ["morph", "melt", "--ground", "set.json", "--se", "line-se.json", "--object", "set-123.json"],
        ["logic", "eval", "--model", "kripke.json"],
        ["logic", "prove-check", "--bundled", "fermat"],
        ["laws", "--ground", "p4.json", "--se", "closed-neighborhood.json", "--forget", "hyperedge"],
        [],
    ],
)
def test_bad_input_exit_2(argv, capsys):
    argv = [D(a) if a.endswith(".json") else a for a in argv]
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "morphocat", "logic", "prove-check", "--bundled", "kripke-schema"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["ok"] is True
