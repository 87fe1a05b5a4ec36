"""JSON serialization with canonical, byte-reproducible output.

Rationals are written as strings ``"p/q"`` (or ``"p"`` for integers),
polynomial terms as exponent/coefficient records sorted by exponent
vector, and every file is emitted through ``canonical_dumps`` so that the
same mathematical content always produces identical bytes.  Writes go
through a temporary file in the target directory followed by an atomic
rename, so a crash cannot leave a half-written report behind.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from typing import Sequence

from .engine import (CheckResult, SuperAlgebraData, SymplecticRep, TestReport)
from .exactla import Matrix, Scalar, as_scalar
from .liealg import QuadraticLieAlgebra
from .symplectic import SymplecticSpace, standard_space
from .weyl import PolyElement


class ParseError(Exception):
    """Malformed input file or object."""


def scalar_to_str(x: Scalar) -> str:
    return str(x)


def scalar_from_str(text) -> Scalar:
    if not isinstance(text, (str, int)):
        raise ParseError(f"expected a rational string, got {text!r}")
    try:
        return as_scalar(text if isinstance(text, str) else int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}: {exc}") from exc


def matrix_to_json(m: Matrix) -> list[list[str]]:
    return [[scalar_to_str(x) for x in m.row(i)] for i in range(m.rows)]


def matrix_from_json(obj, rows: int | None = None, cols: int | None = None) -> Matrix:
    if not isinstance(obj, list) or any(not isinstance(r, list) for r in obj):
        raise ParseError("matrix must be a list of rows")
    try:
        m = Matrix([[scalar_from_str(x) for x in row] for row in obj], cols=cols)
    except Exception as exc:
        raise ParseError(f"bad matrix: {exc}") from exc
    if rows is not None and m.rows != rows:
        raise ParseError(f"expected {rows} rows, got {m.rows}")
    if cols is not None and m.cols != cols:
        raise ParseError(f"expected {cols} columns, got {m.cols}")
    return m


def poly_to_json(p: PolyElement) -> list[dict]:
    return [{"exp": list(exp), "coeff": scalar_to_str(coeff)}
            for exp, coeff in p.sorted_terms()]


def poly_from_json(space: SymplecticSpace, obj) -> PolyElement:
    if not isinstance(obj, list):
        raise ParseError("polynomial must be a list of terms")
    terms = {}
    for item in obj:
        if not isinstance(item, dict) or "exp" not in item or "coeff" not in item:
            raise ParseError("each term needs 'exp' and 'coeff'")
        exp = tuple(int(k) for k in item["exp"])
        terms[exp] = terms.get(exp, as_scalar(0)) + scalar_from_str(item["coeff"])
    try:
        return PolyElement(space, terms)
    except Exception as exc:
        raise ParseError(f"bad polynomial: {exc}") from exc


def space_to_json(space: SymplecticSpace) -> dict:
    return {"dim": space.dim, "omega": matrix_to_json(space.omega)}


def space_from_json(obj) -> SymplecticSpace:
    if not isinstance(obj, dict) or "dim" not in obj:
        raise ParseError("space needs a 'dim' field")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise ParseError(f"bad space dimension {dim!r}")
    omega = obj.get("omega", "standard")
    if omega == "standard":
        if dim % 2 or dim == 0:
            raise ParseError("'standard' omega needs a positive even dimension")
        return standard_space(dim // 2)
    return SymplecticSpace(dim, matrix_from_json(omega, rows=dim, cols=dim))


def algebra_to_json(g: QuadraticLieAlgebra) -> dict:
    entries = []
    for i in range(g.dim):
        for j in range(i + 1, g.dim):
            for l, c in enumerate(g.bracket(i, j)):
                if c != 0:
                    entries.append([i, j, l, scalar_to_str(c)])
    return {"dim": g.dim, "brackets": entries, "form": matrix_to_json(g.form)}


def algebra_from_json(obj) -> QuadraticLieAlgebra:
    if not isinstance(obj, dict) or "dim" not in obj or "form" not in obj:
        raise ParseError("algebra needs 'dim' and 'form' fields")
    dim = obj["dim"]
    if not isinstance(dim, int) or dim < 0:
        raise ParseError(f"bad algebra dimension {dim!r}")
    entries = []
    for item in obj.get("brackets", []):
        if not isinstance(item, list) or len(item) != 4:
            raise ParseError("each bracket entry must be [i, j, l, value]")
        i, j, l, value = item
        if not all(isinstance(t, int) for t in (i, j, l)):
            raise ParseError("bracket indices must be integers")
        entries.append((i, j, l, scalar_from_str(value)))
    form = matrix_from_json(obj["form"], rows=dim, cols=dim)
    try:
        return QuadraticLieAlgebra.from_sparse(dim, entries, form)
    except (ValueError, IndexError) as exc:
        raise ParseError(str(exc)) from exc


def problem_to_json(rep: SymplecticRep) -> dict:
    return {
        "space": space_to_json(rep.space),
        "g0": algebra_to_json(rep.algebra),
        "nu": [matrix_to_json(m) for m in rep.matrices],
    }


def problem_from_json(obj) -> SymplecticRep:
    if not isinstance(obj, dict):
        raise ParseError("problem file must contain a JSON object")
    for field in ("space", "g0", "nu"):
        if field not in obj:
            raise ParseError(f"problem file is missing {field!r}")
    space = space_from_json(obj["space"])
    algebra = algebra_from_json(obj["g0"])
    nu = obj["nu"]
    if not isinstance(nu, list) or len(nu) != algebra.dim:
        raise ParseError("'nu' must list one matrix per basis element of g0")
    matrices = tuple(matrix_from_json(m, rows=space.dim, cols=space.dim) for m in nu)
    try:
        return SymplecticRep(algebra, space, matrices)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def load_problem(path: str) -> SymplecticRep:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            obj = json.load(handle)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    return problem_from_json(obj)


def checks_to_json(checks: Sequence[CheckResult]) -> list[dict]:
    return [{"name": c.name, "pass": c.passed, "witness": c.witness} for c in checks]


def odd_brackets_to_json(s: SuperAlgebraData) -> list:
    out = []
    for (a, b) in sorted(s.odd_odd):
        coords = s.odd_odd[(a, b)]
        if any(c != 0 for c in coords):
            out.append([a, b, [scalar_to_str(c) for c in coords]])
    return out


def report_to_json(report: TestReport, checks: Sequence[CheckResult],
                   odd_brackets: list | None, version: str, digest: str) -> dict:
    return {
        "tool_version": version,
        "input_digest": digest,
        "verdict": report.verdict,
        "casimir_scalar": (scalar_to_str(report.casimir_scalar)
                           if report.casimir_scalar is not None else None),
        "obstruction": poly_to_json(report.obstruction),
        "odd_brackets": odd_brackets,
        "checks": checks_to_json(checks),
    }


def superalgebra_to_json(s: SuperAlgebraData, checks: Sequence[CheckResult],
                         version: str, digest: str) -> dict:
    return {
        "tool_version": version,
        "input_digest": digest,
        "even": algebra_to_json(s.even),
        "odd_dim": s.odd_dim,
        "even_odd": [matrix_to_json(m) for m in s.even_odd],
        "odd_brackets": [[a, b, [scalar_to_str(c) for c in s.odd_odd[(a, b)]]]
                         for (a, b) in sorted(s.odd_odd)],
        "form_even": matrix_to_json(s.form_even),
        "form_odd": matrix_to_json(s.form_odd),
        "checks": checks_to_json(checks),
    }


def canonical_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def write_json_atomic(path: str, obj) -> None:
    """Serialize canonically and rename into place so readers never see a
    partial file."""
    text = canonical_dumps(obj)
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def file_digest(path: str) -> str:
    with open(path, "rb") as handle:
        return hashlib.sha256(handle.read()).hexdigest()
