"""Even-dimensional rational vector spaces with a nonsingular alternating form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactla import (DimensionMismatch, Matrix, Scalar, SingularMatrix,
                      as_scalar, invert)

Vector = tuple[Scalar, ...]


class SymplecticError(Exception):
    """Base class for defective symplectic data."""


class OddDimension(SymplecticError):
    def __init__(self, dim: int):
        self.dim = dim
        super().__init__(f"symplectic space must have even dimension, got {dim}")


class NotAlternating(SymplecticError):
    def __init__(self, detail: str = "form matrix is not antisymmetric"):
        super().__init__(detail)


class Singular(SymplecticError):
    def __init__(self, detail: str = "form matrix is singular"):
        super().__init__(detail)


@dataclass(frozen=True)
class SymplecticSpace:
    """A coordinate space of dimension ``dim`` with bilinear form matrix ``omega``.

    The form of two coordinate vectors u, v is u^T omega v.  Construction only
    checks shapes; ``validate_space`` performs the mathematical checks.
    """

    dim: int
    omega: Matrix

    def __post_init__(self):
        if self.omega.rows != self.dim or self.omega.cols != self.dim:
            raise DimensionMismatch(
                f"omega must be {self.dim}x{self.dim}, got {self.omega.rows}x{self.omega.cols}")

    def basis_vector(self, i: int) -> Vector:
        if not 0 <= i < self.dim:
            raise IndexError(f"basis index {i} out of range for dimension {self.dim}")
        return tuple(as_scalar(1 if j == i else 0) for j in range(self.dim))

    def zero_vector(self) -> Vector:
        return tuple(as_scalar(0) for _ in range(self.dim))


def as_vector(space: SymplecticSpace, coords: Sequence) -> Vector:
    v = tuple(as_scalar(x) for x in coords)
    if len(v) != space.dim:
        raise DimensionMismatch(f"expected {space.dim} coordinates, got {len(v)}")
    return v


def standard_space(m: int) -> SymplecticSpace:
    """The 2m-dimensional space with basis e_1..e_m, f_1..f_m and (e_i, f_j) = delta_ij."""
    if m < 1:
        raise ValueError("standard space needs at least one hyperbolic pair")
    n = 2 * m
    omega = Matrix([[as_scalar(1) if j == i + m else as_scalar(-1) if i == j + m else as_scalar(0)
                     for j in range(n)] for i in range(n)], cols=n)
    return SymplecticSpace(n, omega)


def validate_space(space: SymplecticSpace) -> None:
    """Check that ``omega`` is alternating and nonsingular on an even-dimensional space."""
    if space.dim % 2 != 0:
        raise OddDimension(space.dim)
    if space.omega.transpose() != -space.omega:
        raise NotAlternating()
    try:
        invert(space.omega)
    except SingularMatrix as exc:
        raise Singular(str(exc)) from exc


def pair(space: SymplecticSpace, u: Sequence, v: Sequence) -> Scalar:
    """The form value u^T omega v."""
    uu = as_vector(space, u)
    vv = as_vector(space, v)
    total = as_scalar(0)
    for i, ui in enumerate(uu):
        if ui == 0:
            continue
        row = space.omega.row(i)
        total += ui * sum((row[j] * vv[j] for j in range(space.dim)), as_scalar(0))
    return total


def is_in_sp(space: SymplecticSpace, alpha: Matrix) -> bool:
    """Whether ``alpha`` is an infinitesimal symmetry of the form:
    alpha^T omega + omega alpha = 0."""
    if alpha.rows != space.dim or alpha.cols != space.dim:
        raise DimensionMismatch(
            f"expected a {space.dim}x{space.dim} matrix, got {alpha.rows}x{alpha.cols}")
    return (alpha.transpose() * space.omega + space.omega * alpha).is_zero()
