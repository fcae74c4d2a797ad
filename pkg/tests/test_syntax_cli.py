import io
import json

import pytest
from hypothesis import given

from gisemi import ZERO
from gisemi.cli import run
from gisemi.gis import Edge, EdgeInverse, Vertex
from gisemi.graph import g1
from gisemi.polycyclic import Letter, PolyElement
from gisemi.syntax import (ParseError, format_element, format_letters, format_poly, parse_element,
                           parse_expression, parse_letters, parse_poly)

from strategies import elements

GRAPH = g1()


def cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_parse_expression(G1):
    assert parse_expression(G1, "v1 e f^-1 0") == [Vertex("v1"), Edge("e"), EdgeInverse("f"), ZERO]
    assert format_element(parse_element(G1, "e f^-1 f e^-1")) == "e e^-1"
    assert format_element(parse_element(G1, "e^-1 f")) == "0"
    assert format_element(parse_element(G1, "v2")) == "v2"


@pytest.mark.parametrize("text, msg", [("e^-2", "malformed"), ("v1^-1", "inverse suffix on vertex"),
                                       ("e g", "unknown identifier g"), ("", "empty"), ("^-1", "malformed")])
def test_parse_errors(G1, text, msg):
    with pytest.raises(ParseError, match=msg):
        parse_expression(G1, text)


def test_parse_error_position(G1):
    with pytest.raises(ParseError) as info:
        parse_expression(G1, "e\n  f  g")
    assert (info.value.line, info.value.column) == (2, 6)


@given(elements(GRAPH))
def test_gis_print_parse_round_trip(x):
    assert parse_element(GRAPH, format_element(x)) == x


def test_poly_text():
    z = PolyElement((0, 2), (0, 3))
    assert format_poly(z) == "[0 2][0 3]^-1"
    assert parse_poly("[0 2][0 3]^-1") == z
    assert parse_poly("[][]^-1") == PolyElement()
    assert parse_poly("0") is ZERO
    for bad in ("[01][]^-1", "[0  2][]^-1", "[0,2][]^-1", "[1]"):
        with pytest.raises(ParseError):
            parse_poly(bad)


def test_letters_text():
    w = parse_letters("p0 p12^-1")
    assert w == [Letter(0), Letter(12, False)]
    assert format_letters(w) == "p0 p12^-1"
    with pytest.raises(ParseError):
        parse_letters("q1")


def test_cli_algebra():
    assert cli("mul", "--builtin", "g1", "e f^-1", "f e^-1") == (0, "e e^-1\n")
    assert cli("reduce", "--builtin", "g1", "e e^-1 e") == (0, "e\n")
    assert cli("invert", "--builtin", "g1", "e f^-1") == (0, "f e^-1\n")
    assert cli("embed", "--builtin", "g1", "e f^-1") == (0, "[0 2][0 3]^-1\n")
    assert cli("embed", "--builtin", "g1", "--p2", "e f^-1") == (0, "[0 1 1 0][0 1 1 1 0]^-1\n")


def test_cli_paths(tmp_path):
    code, out = cli("paths", "--builtin", "g1", "--max-len", "1")
    assert code == 0 and out.split("\n")[:-1] == ["v1", "v2", "e", "f"]
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"vertices": ["a"], "edges": [{"id": "x", "src": "a", "dst": "a"}]}))
    code, out = cli("paths", "--graph", str(path), "--max-len", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)[-1] == {"start": "a", "edges": ["x", "x"], "end": "a"}


def test_cli_poly():
    assert cli("poly", "reduce", "--arity", "2", "p0^-1 p0") == (0, "[][]^-1\n")
    assert cli("poly", "reduce", "--arity", "2", "p1^-1 p0") == (0, "0\n")
    assert cli("poly", "reduce", "--arity", "2", "--strategy", "rightmost", "p0 p1^-1 p1") == (0, "[0][]^-1\n")
    assert cli("poly", "mul", "--arity", "2", "[0][1]^-1", "[1][0]^-1") == (0, "[0][0]^-1\n")


def test_cli_input_errors(tmp_path, capsys):
    assert cli("mul", "--builtin", "g1", "e^-2", "e")[0] == 2
    assert "1:1" in capsys.readouterr().err
    assert cli("reduce", "--builtin", "nope", "e")[0] == 2
    assert cli("poly", "reduce", "--arity", "1", "p1")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"vertices": ["a"], "edges": [{"id": "x", "src": "a", "dst": "b"}]}))
    assert cli("paths", "--graph", str(bad))[0] == 2
    assert "dangling endpoint b" in capsys.readouterr().err
    bad.write_text("{")
    assert cli("paths", "--graph", str(bad))[0] == 2
    assert cli("paths", "--graph", str(tmp_path / "missing.json"))[0] == 2


def test_cli_verify_json():
    code, out = cli("verify", "axioms", "--builtin", "g1", "--max-len", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "pass" and doc["suite"] == "axioms"
    assert doc["results"][0]["status"] == "pass"


def test_cli_verify_text():
    code, out = cli("verify", "embedding", "--max-len", "2")
    assert code == 0 and out.rstrip().endswith("status: pass")


def test_cli_verify_counterexample_exit(monkeypatch):
    from gisemi import suites
    bad = suites.SuiteResult("axioms")
    bad.fail("planted", "x")
    monkeypatch.setattr(suites, "run_suite", lambda name, g, cfg: [bad])
    code, out = cli("verify", "axioms")
    assert code == 1 and "planted" in out
