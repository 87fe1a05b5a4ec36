"""Finite-dimensional Lie algebras over Q with an invariant nonsingular form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactla import (DimensionMismatch, Matrix, Scalar, SingularMatrix,
                      as_scalar, invert)

_ZERO = as_scalar(0)


class LieAlgebraError(Exception):
    """Base class for defective Lie algebra data."""


class NotAntisymmetric(LieAlgebraError):
    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"bracket table is not antisymmetric at basis pair ({i}, {j})")


class JacobiFails(LieAlgebraError):
    def __init__(self, i: int, j: int, l: int):
        self.triple = (i, j, l)
        super().__init__(f"Jacobi identity fails on basis triple ({i}, {j}, {l})")


class FormSingular(LieAlgebraError):
    def __init__(self, detail: str = "invariant form matrix is singular"):
        super().__init__(detail)


class FormNotInvariant(LieAlgebraError):
    def __init__(self, i: int, j: int, l: int):
        self.triple = (i, j, l)
        super().__init__(f"form is not ad-invariant on basis triple ({i}, {j}, {l})")


@dataclass(frozen=True)
class QuadraticLieAlgebra:
    """Structure constants and a symmetric bilinear form on a fixed basis.

    ``brackets[i][j]`` holds the coordinates of the bracket of basis
    elements i and j.  Construction normalizes shapes only; the
    mathematical axioms are checked by ``validate_lie``.
    """

    dim: int
    brackets: tuple[tuple[tuple[Scalar, ...], ...], ...]
    form: Matrix

    def __post_init__(self):
        k = self.dim
        if len(self.brackets) != k or any(len(row) != k for row in self.brackets):
            raise DimensionMismatch("bracket table must be dim x dim")
        if any(len(v) != k for row in self.brackets for v in row):
            raise DimensionMismatch("bracket coordinates must have length dim")
        if self.form.rows != k or self.form.cols != k:
            raise DimensionMismatch("form matrix must be dim x dim")

    @classmethod
    def from_sparse(cls, dim: int, entries: Sequence[tuple[int, int, int, object]],
                    form: Matrix) -> "QuadraticLieAlgebra":
        """Build from sparse entries (i, j, l, value) with i < j meaning the
        bracket of x_i and x_j has coefficient value on x_l.  The
        antisymmetric completion is automatic."""
        table = [[[_ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, l, value in entries:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= l < dim):
                raise IndexError(f"bracket entry ({i}, {j}, {l}) out of range")
            if i >= j:
                raise ValueError(f"sparse bracket entries need i < j, got ({i}, {j})")
            c = as_scalar(value)
            table[i][j][l] += c
            table[j][i][l] -= c
        frozen = tuple(tuple(tuple(v) for v in row) for row in table)
        return cls(dim, frozen, form)

    @classmethod
    def abelian(cls, dim: int, form: Matrix | None = None) -> "QuadraticLieAlgebra":
        if form is None:
            form = Matrix.identity(dim)
        return cls.from_sparse(dim, [], form)

    def bracket(self, i: int, j: int) -> tuple[Scalar, ...]:
        return self.brackets[i][j]

    def bracket_vectors(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Bilinear extension of the bracket to coordinate vectors."""
        out = [_ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                for l, c in enumerate(self.brackets[i][j]):
                    if c != 0:
                        out[l] += xi * yj * c
        return tuple(out)

    def form_value(self, x: Sequence[Scalar], y: Sequence[Scalar]) -> Scalar:
        total = _ZERO
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            row = self.form.row(i)
            total += xi * sum((row[j] * y[j] for j in range(self.dim)), _ZERO)
        return total


def validate_lie(g: QuadraticLieAlgebra) -> None:
    """Check antisymmetry, the Jacobi identity, and that the form is
    symmetric, nonsingular and ad-invariant.  Raises the first violation."""
    k = g.dim
    for i in range(k):
        for j in range(k):
            if any(a != -b for a, b in zip(g.brackets[i][j], g.brackets[j][i])):
                raise NotAntisymmetric(i, j)
    units = [tuple(as_scalar(1 if t == l else 0) for t in range(k)) for l in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            for l in range(j + 1, k):
                total = [_ZERO] * k
                for (a, b, c) in ((i, j, l), (j, l, i), (l, i, j)):
                    inner = g.bracket(a, b)
                    outer = g.bracket_vectors(inner, units[c])
                    total = [x + y for x, y in zip(total, outer)]
                if any(x != 0 for x in total):
                    raise JacobiFails(i, j, l)
    if g.form.transpose() != g.form:
        raise FormSingular("form matrix is not symmetric")
    try:
        invert(g.form)
    except SingularMatrix as exc:
        raise FormSingular(str(exc)) from exc
    for i in range(k):
        for j in range(k):
            for l in range(k):
                lhs = g.form_value(g.bracket(i, j), units[l])
                rhs = g.form_value(units[j], g.bracket(i, l))
                if lhs + rhs != 0:
                    raise FormNotInvariant(i, j, l)


@dataclass(frozen=True)
class CasimirPairs:
    """Dual pairs (i, coordinates of the dual basis vector) for the form."""

    pairs: tuple[tuple[int, tuple[Scalar, ...]], ...]


def casimir_pairs(g: QuadraticLieAlgebra) -> CasimirPairs:
    """Dual basis against the form: the i-th dual vector is column i of the
    inverse form matrix, so that form(x_i, dual_j) = delta_ij."""
    try:
        inv = invert(g.form)
    except SingularMatrix as exc:
        raise FormSingular(str(exc)) from exc
    return CasimirPairs(tuple((i, inv.col(i)) for i in range(g.dim)))
