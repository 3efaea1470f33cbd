import io
import json
import subprocess
import sys

import pytest
from hypothesis import given

from church import terms
from stlc_nbe.cli.main import CliConfig, check_document, main
from stlc_nbe.cli.surface import (parse_ctxt_decl, parse_term, parse_type, print_term,
                                  print_type)
from stlc_nbe.errors import ParseError, TypeMismatch, UnboundVariable
from stlc_nbe.syntax import IOTA, Arr, arrows

II = arrows(IOTA, IOTA)


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_types_parse_right_associatively():
    assert parse_type("o->o->o") == Arr(IOTA, II)
    assert parse_type("(o->o)->o") == Arr(II, IOTA)
    assert print_type(Arr(II, IOTA)) == "(o->o)->o"
    with pytest.raises(ParseError):
        parse_type("o->")


def test_term_parsing_and_errors():
    t = parse_term(r"\f:o->o. \x:o. f (f x)")
    assert t.ty == arrows(II, IOTA, IOTA)
    assert print_term(t) == r"\x0:o->o. \x1:o. x0 (x0 x1)"
    assert parse_term("λf:o->o. f").ty == Arr(II, II)
    with pytest.raises(UnboundVariable):
        parse_term("y")
    with pytest.raises(TypeMismatch, match="1:9"):
        parse_term(r"\x:o. x x")
    with pytest.raises(ParseError) as e:
        parse_term(r"\x:o x")
    assert (e.value.line, e.value.col) == (1, 6)
    assert parse_ctxt_decl("f:o->o") == ("f", II)


def test_shadowing():
    t = parse_term(r"\x:o->o. \x:o. x", [])
    assert print_term(t) == r"\x0:o->o. \x1:o. x1"
    u = parse_term("x", [("x", II), ("x", IOTA)])
    assert u.ty == IOTA


@given(terms())
def test_print_parse_round_trip(t):
    names = [f"x{k}" for k in range(len(t.ctxt))]
    ctx = list(zip(names, t.ctxt.types))
    assert parse_term(print_term(t), ctx) == t


def test_nf_command():
    assert run(["nf", r"\f:o->o. f"]) == (0, "\\x0:o->o. \\x1:o. x0 x1\n")
    code, out = run(["nf", "f", "--var", "f:o->o"])
    assert code == 0 and out.strip() == r"\x1:o. f x1"
    code, out = run(["nf", "--json", r"\x:o. x"])
    assert json.loads(out)["nf"] == ["abs", ["iota"], ["var", 0]]


def test_cert_round_trip(tmp_path):
    code, out = run(["nf", "--cert", r"(\n:(o->o)->o->o. \f:o->o. \x:o. f (n f x)) "
                                      r"(\f:o->o. f)"])
    assert code == 0
    doc = json.loads(out)
    assert doc["nf_text"] == r"\x0:o->o. \x1:o. x0 (x0 x1)"
    p = tmp_path / "cert.json"
    p.write_text(out)
    assert run(["check", str(p)]) == (0, "valid\n")
    doc["cert_wit_nf"] = {"rule": "Symm", "d": doc["cert_wit_nf"]}
    p.write_text(json.dumps(doc))
    assert run(["check", str(p)])[0] == 1


def test_check_locates_bad_node():
    doc = {"ctxt": [["arr", ["iota"], ["iota"]]],
           "lhs": ["var", 0],
           "rhs": ["abs", ["iota"], ["app", ["var", 1], ["var", 0]]],
           "deriv": {"rule": "Symm", "d": {"rule": "Eta", "term": ["var", 0],
                                           "ty": ["arr", ["iota"], ["iota"]]}}}
    problems = check_document(doc)
    assert problems and problems[0]["path"] == ["Symm"]
    doc["deriv"] = {"rule": "Eta", "term": ["var", 0], "ty": ["iota"]}
    assert check_document(doc) == []
    with pytest.raises(ParseError):
        check_document({"lhs": 1})


def test_eq_command():
    assert run(["eq", r"\f:o->o. f", r"\f:o->o. \x:o. f x"])[0] == 0
    assert run(["eq", r"\f:o->o. \x:o. x", r"\f:o->o. \x:o. f x"]) == (1, "not convertible\n")


def test_usage_errors(capsys):
    assert run(["nf"])[0] == 2
    assert run(["nf", "y"])[0] == 2
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["error"] == "UnboundVariable" and err["name"] == "y"
    assert run(["nf", r"\x:o. x x"])[0] == 2
    assert run(["nf", r"\x:o"])[0] == 2
    err = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
    assert err["error"] == "ParseError" and err["line"] == 1
    assert run(["bogus"])[0] == 2
    assert run(["laws", "--bounds", "fuel=0"])[0] == 2
    assert run(["check", "/nonexistent.json"])[0] == 2
    with pytest.raises(ValueError):
        CliConfig(command="frobnicate")


def test_laws_command():
    code, out = run(["laws", "--suite", "rnm_category", "--bounds", "type_depth=1",
                     "ctxt_len=1"])
    assert code == 0 and out.startswith("rnm_category:") and "ok" in out


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "stlc_nbe.cli", "nf", r"\x:o. x"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout.strip() == r"\x0:o. x0"
