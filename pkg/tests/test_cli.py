import json
import os
from fractions import Fraction

import pytest

from superweyl import __version__
from superweyl.catalog import build_osp_even, build_spin_rep
from superweyl.cli import main
from superweyl.exactla import Matrix
from superweyl.jsonio import (ParseError, canonical_dumps, matrix_from_json,
                              matrix_to_json, poly_from_json, poly_to_json,
                              problem_from_json, problem_to_json,
                              scalar_from_str, scalar_to_str, space_from_json,
                              space_to_json, write_json_atomic)
from superweyl.symplectic import standard_space
from superweyl.weyl import PolyElement


# -- serialization round trips ---------------------------------------------


def test_scalar_strings():
    assert scalar_to_str(Fraction(-3, 8)) == "-3/8"
    assert scalar_to_str(Fraction(4)) == "4"
    assert scalar_from_str("-3/8") == Fraction(-3, 8)
    assert scalar_from_str("7") == Fraction(7)
    with pytest.raises(ParseError):
        scalar_from_str("abc")
    with pytest.raises(ParseError):
        scalar_from_str(None)


def test_matrix_round_trip():
    m = Matrix([[1, Fraction(1, 2)], [-3, 0]])
    assert matrix_from_json(matrix_to_json(m)) == m
    with pytest.raises(ParseError):
        matrix_from_json([[0.5]])
    with pytest.raises(ParseError):
        matrix_from_json("nope")
    with pytest.raises(ParseError):
        matrix_from_json([["1", "2"]], rows=2)


def test_poly_round_trip():
    s = standard_space(1)
    p = (PolyElement.monomial(s, (2, 1), Fraction(3, 4))
         + PolyElement.constant(s, -2))
    assert poly_from_json(s, poly_to_json(p)) == p
    assert poly_to_json(PolyElement.zero(s)) == []
    # duplicate exponents accumulate
    doubled = poly_from_json(s, [{"exp": [1, 0], "coeff": "1"},
                                 {"exp": [1, 0], "coeff": "2"}])
    assert doubled == PolyElement.monomial(s, (1, 0), 3)


def test_space_round_trip():
    s = standard_space(2)
    assert space_from_json(space_to_json(s)) == s
    assert space_from_json({"dim": 2, "omega": "standard"}) == standard_space(1)
    with pytest.raises(ParseError):
        space_from_json({"dim": 3, "omega": "standard"})
    with pytest.raises(ParseError):
        space_from_json({"omega": "standard"})


def test_problem_round_trip():
    rep = build_osp_even(1, 1)
    obj = problem_to_json(rep)
    back = problem_from_json(obj)
    assert back.algebra.brackets == rep.algebra.brackets
    assert back.algebra.form == rep.algebra.form
    assert back.space == rep.space
    assert back.matrices == rep.matrices


def test_problem_parse_errors():
    with pytest.raises(ParseError):
        problem_from_json({"space": {"dim": 2, "omega": "standard"}})
    rep = build_osp_even(1, 1)
    obj = problem_to_json(rep)
    obj["nu"] = obj["nu"][:2]
    with pytest.raises(ParseError):
        problem_from_json(obj)


def test_canonical_dumps_is_stable():
    a = canonical_dumps({"b": 1, "a": [2, 3]})
    b = canonical_dumps({"a": [2, 3], "b": 1})
    assert a == b
    assert a.endswith("\n")


def test_atomic_write(tmp_path):
    target = tmp_path / "out.json"
    write_json_atomic(str(target), {"x": 1})
    assert json.loads(target.read_text()) == {"x": 1}
    leftovers = [p for p in os.listdir(tmp_path) if p.endswith(".tmp")]
    assert leftovers == []


# -- command-line flows ----------------------------------------------------


def _write_instance(tmp_path, name, *params):
    path = str(tmp_path / f"{name}.json")
    assert main(["catalog", name, *params, "--out", path]) == 0
    return path


def test_validate_flow(tmp_path, capsys):
    path = _write_instance(tmp_path, "osp_even", "1", "1")
    assert main(["validate", path]) == 0
    out = capsys.readouterr().out
    assert "ok" in out


def test_test_flow_writes_deterministic_report(tmp_path):
    path = _write_instance(tmp_path, "osp_even", "1", "1")
    r1 = str(tmp_path / "r1.json")
    r2 = str(tmp_path / "r2.json")
    assert main(["test", path, "--report", r1]) == 0
    assert main(["test", path, "--report", r2]) == 0
    b1 = open(r1, "rb").read()
    b2 = open(r2, "rb").read()
    assert b1 == b2
    report = json.loads(b1)
    assert report["verdict"] is True
    assert report["casimir_scalar"] == "-3/8"
    assert report["obstruction"] == []
    assert report["tool_version"] == __version__
    assert len(report["input_digest"]) == 64
    assert [0, 0, ["0", "-1", "0"]] in report["odd_brackets"]
    names = [c["name"] for c in report["checks"]]
    assert "jacobi_ooo" in names and "trace_identity" in names
    assert all(c["pass"] for c in report["checks"])


def test_test_flow_negative_instance(tmp_path):
    path = _write_instance(tmp_path, "spin", "3")
    report_path = str(tmp_path / "r.json")
    assert main(["test", path, "--report", report_path]) == 0
    report = json.loads(open(report_path).read())
    assert report["verdict"] is False
    assert report["casimir_scalar"] is None
    assert report["odd_brackets"] is None
    assert report["obstruction"]


def test_construct_flow(tmp_path):
    path = _write_instance(tmp_path, "gl11")
    out = str(tmp_path / "s.json")
    assert main(["construct", path, "--out", out]) == 0
    data = json.loads(open(out).read())
    assert [0, 1, ["1", "1"]] in data["odd_brackets"]
    assert data["even"]["dim"] == 2
    assert all(c["pass"] for c in data["checks"])


def test_construct_obstructed_exits_two(tmp_path, capsys):
    path = _write_instance(tmp_path, "spin", "3")
    out = str(tmp_path / "s.json")
    assert main(["construct", path, "--out", out]) == 2
    assert "obstructed" in capsys.readouterr().out
    assert not os.path.exists(out)


def test_catalog_to_stdout(tmp_path, capsys):
    assert main(["catalog", "gl11"]) == 0
    printed = capsys.readouterr().out
    assert json.loads(printed)["space"]["dim"] == 2


def test_error_paths_print_exception_names(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{broken")
    assert main(["validate", str(bad)]) == 1
    assert capsys.readouterr().err.startswith("ParseError:")

    odd = tmp_path / "odd.json"
    odd.write_text(json.dumps({
        "space": {"dim": 1, "omega": [["0"]]},
        "g0": {"dim": 0, "brackets": [], "form": []},
        "nu": []}))
    assert main(["validate", str(odd)]) == 1
    assert capsys.readouterr().err.startswith("OddDimension:")

    missing = str(tmp_path / "missing.json")
    assert main(["validate", missing]) == 1
    assert capsys.readouterr().err.startswith("ParseError:")

    assert main(["catalog", "nonsense"]) == 1
    assert capsys.readouterr().err.startswith("UnknownInstance:")

    assert main(["catalog", "spin", "2"]) == 1
    assert capsys.readouterr().err.startswith("NotSymplectic:")


def test_validation_error_names_surface(tmp_path, capsys):
    # identity matrix does not preserve the form: the rep check must say so
    obj = {
        "space": {"dim": 2, "omega": "standard"},
        "g0": {"dim": 1, "brackets": [], "form": [["1"]]},
        "nu": [[["1", "0"], ["0", "1"]]],
    }
    path = tmp_path / "p.json"
    path.write_text(json.dumps(obj))
    assert main(["validate", str(path)]) == 1
    assert capsys.readouterr().err.startswith("NotSymplectic:")


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert __version__ in capsys.readouterr().out
