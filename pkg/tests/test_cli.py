import io
import json
import subprocess
import sys

import jsonschema
import pytest

from ersns import complement, isomorphic, named_graph, parse_graph6, write_graph6
from ersns.cli import main, parse_graph_arg
from ersns.reports import load_schema

PETERSEN_G6 = write_graph6(named_graph("petersen"))
CO_PETERSEN_G6 = write_graph6(complement(named_graph("petersen")))


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def validate(text):
    doc = json.loads(text)
    jsonschema.validate(doc, load_schema())
    return doc


def test_graph_argument_forms():
    assert parse_graph_arg("named:petersen") == named_graph("petersen")
    assert parse_graph_arg("named:turan:9,3") == named_graph("turan", 9, 3)
    assert parse_graph_arg("edges:3:0-1,1-2") == named_graph("path", 3)
    assert parse_graph_arg("edges:2:") == parse_graph6("A?")
    assert parse_graph_arg("complement:named:complete:3").edge_count == 0
    assert parse_graph_arg("Bw") == named_graph("complete", 3)


def test_analyze_complement_petersen(capsys):
    code, out, _ = run(capsys, "analyze", CO_PETERSEN_G6)
    doc = validate(out)
    assert code == 0
    assert doc["payload"]["er"] == [10, 6, 3]
    assert doc["payload"]["sns"]["usns"] == "BG"  # K_2 + K_1
    assert doc["inputs"] == [CO_PETERSEN_G6]


def test_analyze_stdin(capsys, monkeypatch):
    code, out, _ = run(capsys, "analyze", "-", stdin=PETERSEN_G6 + "\n", monkeypatch=monkeypatch)
    assert code == 0 and validate(out)["payload"]["er"] == [10, 3, 0]


def test_product(capsys):
    code, out, _ = run(capsys, "product", "--op", "cartesian", "named:complete:4", "named:k6_minus_pm")
    doc = validate(out)
    assert code == 0 and doc["payload"]["er"] == [24, 7, 2] and doc["payload"]["holds"]
    code, out, _ = run(capsys, "product", "--op", "tensor", "Bw", "Bw")
    assert validate(out)["payload"]["expected"] == [9, 4, 1]


def test_shadow(capsys):
    code, out, _ = run(capsys, "shadow", "-m", "3", "Bw")
    assert code == 0
    assert isomorphic(parse_graph6(out.strip()), named_graph("turan", 9, 3))


def test_enumerate_streams(capsys):
    code, out, err = run(capsys, "enumerate", "-n", "5", "-d", "2", "-l", "0")
    (line,) = out.split()
    assert code == 0 and isomorphic(parse_graph6(line), named_graph("cycle", 5))
    stats = json.loads(err)
    assert stats["emitted"] == 1 and stats["complete"] and "elapsed" in stats
    code, out, _ = run(capsys, "enumerate", "-n", "9", "-d", "8", "-l", "1")
    assert code == 0 and out == ""
    code, _, err = run(capsys, "enumerate", "-n", "20", "-d", "3", "-l", "0")
    assert code == 2 and "allow" in err


def test_scan_forbidden(capsys):
    code, out, _ = run(capsys, "scan-forbidden", "--family", "p3", "--max-n", "8")
    doc = validate(out)
    assert code == 0 and doc["payload"]["verdict"] == "confirmed"
    assert doc["payload"]["universe"]["graphs_scanned"] > 0
    code, _, err = run(capsys, "scan-forbidden", "--family", "kmn:1,1", "--max-n", "8")
    assert code == 2 and "equal parts" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--theorem", "cartesian-usns", "named:complete:4", "named:k6_minus_pm"],
    ["verify", "--theorem", "tensor-usns", "named:complete:5", "named:complete:4"],
    ["verify", "--theorem", "shadow", "-q", "2", "-m", "3", "Bw"],
    ["verify", "--theorem", "p5", "--lambdas", "5", "--max-n", "11"],
    ["verify", "--theorem", "p3h", "--lambdas", "7-10"],
    ["verify", "--theorem", "p3h", "named:k6_minus_pm"],
])
def test_verify(capsys, argv):
    code, out, _ = run(capsys, *argv)
    doc = validate(out)
    assert code == 0 and doc["payload"]["verdict"] in {"confirmed", "vacuous", "not_applicable"}


def test_verify_precondition_is_usage_error(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "cartesian-usns", "named:complete:3",
                       "named:complete:4")
    assert code == 2 and "lambda" in err
    code, _, _ = run(capsys, "verify", "--theorem", "shadow", "Bw", "Bw")
    assert code == 2


def test_conway(capsys, tmp_path):
    for product in ("cartesian", "tensor"):
        code, out, _ = run(capsys, "conway", "--product", product)
        doc = validate(out)
        assert code == 0 and doc["payload"]["surviving"] == 0
    facts = tmp_path / "none.json"
    facts.write_text('{"facts": []}')
    code, out, _ = run(capsys, "conway", "--product", "cartesian", "--facts", str(facts))
    assert code == 1 and validate(out)["payload"]["surviving"] == 1


def test_iso(capsys):
    P = named_graph("petersen")
    perm = (3, 7, 1, 9, 0, 2, 8, 5, 4, 6)
    Q = write_graph6(P.relabel(perm))
    code, out, _ = run(capsys, "iso", PETERSEN_G6, Q)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "isomorphic"
    witness = tuple(int(tok.split("->")[1]) for tok in lines[1].split())
    assert write_graph6(P.relabel(witness)) == Q
    code, out, _ = run(capsys, "iso", PETERSEN_G6, CO_PETERSEN_G6)
    assert code == 1 and out.strip() == "not isomorphic"


def test_convert(capsys, monkeypatch):
    code, out, _ = run(capsys, "convert", "--to", "dot", "A_")
    assert code == 0 and "0 -- 1;" in out
    code, out, _ = run(capsys, "convert", "--to", "g6", "edges:3:0-1,0-2,1-2")
    assert out.strip() == "Bw"
    code, out, _ = run(capsys, "convert", "--to", "dot", stdin="Bw\nA?\n", monkeypatch=monkeypatch)
    assert out.count("graph G") == 2 and out.count("--") == 3


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "analyze", "Bx")[0] == 2
    assert run(capsys, "shadow", "-m", "0", "Bw")[0] == 2
    assert run(capsys)[0] == 2


def test_deterministic_stdout():
    cmd = [sys.executable, "-m", "ersns", "scan-forbidden", "--family", "p4", "--max-n", "9"]
    a = subprocess.run(cmd, capture_output=True, text=True, check=True)
    b = subprocess.run(cmd, capture_output=True, text=True, check=True)
    assert a.stdout == b.stdout and a.stdout
