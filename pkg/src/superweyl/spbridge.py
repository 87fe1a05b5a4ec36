"""Bridge between quadratic polynomials and the matrix algebra of the form.

A homogeneous quadratic polynomial w acts on linear elements through the
noncommutative commutator; concretely ``ad w (v) = -2 contract(v, w)``.
This action is an infinitesimal symmetry of the form, the resulting map
from quadratics to matrices is an isomorphism of Lie algebras (with the
commutator coming from the noncommutative product on the quadratic side),
and its inverse is computed here by solving against the Gram matrix of the
pairing on quadratics.

There is also a scalar worth recording: on quadratics the polynomial
pairing is proportional to the matrix trace form, and ``trace_ratio_constant``
fits the proportionality constant and verifies it on a spanning set.  For
the conventions of this package the constant is -1/8 in every dimension;
the sign is forced by the permanent expansion of the pairing, under which
the square of a mixed quadratic monomial such as e.f is negative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactla import (DimensionMismatch, Matrix, Scalar, as_scalar,
                      solve_linear)
from .symplectic import SymplecticSpace, Vector, as_vector, is_in_sp, pair
from .weyl import (PolyElement, bilinear_form, contract, linear_coordinates,
                   sym_product)


class NotSymplectic(Exception):
    """A matrix fails the infinitesimal symmetry condition."""

    def __init__(self, detail: str = "matrix does not preserve the form", index: int | None = None):
        self.index = index
        if index is not None:
            detail = f"{detail} (matrix {index})"
        super().__init__(detail)


class InconsistentRatio(Exception):
    """The quadratic pairing failed to be a single multiple of the trace form."""


@dataclass(frozen=True)
class SpElement:
    """A matrix satisfying alpha^T omega + omega alpha = 0, checked on construction."""

    space: SymplecticSpace
    matrix: Matrix

    def __post_init__(self):
        if not is_in_sp(self.space, self.matrix):
            raise NotSymplectic()


@dataclass(frozen=True)
class QuadraticElement:
    """A polynomial that is homogeneous of degree two (or zero)."""

    poly: PolyElement

    def __post_init__(self):
        if not self.poly.is_homogeneous(2):
            raise ValueError("quadratic element must be homogeneous of degree 2")


def quadratic_monomials(space: SymplecticSpace) -> list[PolyElement]:
    """Monomial basis x_i x_j (i <= j) of the quadratics, in lexicographic order."""
    out = []
    for i in range(space.dim):
        for j in range(i, space.dim):
            exp = [0] * space.dim
            exp[i] += 1
            exp[j] += 1
            out.append(PolyElement.monomial(space, exp, 1))
    return out


def _index_pairs(dim: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(dim) for j in range(i, dim)]


def ad_vector(w: QuadraticElement, u) -> Vector:
    """Commutator action of a quadratic element on a vector: -2 contract(u, w)."""
    space = w.poly.space
    uu = as_vector(space, u)
    return linear_coordinates(as_scalar(-2) * contract(uu, w.poly))


def quadratic_to_sp(w: QuadraticElement) -> SpElement:
    """Matrix of the commutator action of ``w`` on linear elements.

    The result always satisfies the symmetry condition; the SpElement
    constructor re-checks it.
    """
    space = w.poly.space
    cols = [ad_vector(w, space.basis_vector(j)) for j in range(space.dim)]
    return SpElement(space, Matrix.from_columns(cols, rows=space.dim))


def sp_to_quadratic(alpha: SpElement) -> QuadraticElement:
    """Inverse of ``quadratic_to_sp``.

    Solves for the quadratic w with (x_i x_j, w) = -1/2 (x_i, alpha x_j) for
    all basis pairs, using the Gram matrix of the pairing on the monomial
    basis of quadratics.  Works for any nonsingular form matrix, not just
    the standard one.
    """
    space = alpha.space
    monomials = quadratic_monomials(space)
    if not monomials:
        return QuadraticElement(PolyElement.zero(space))
    gram = Matrix([[bilinear_form(p, q) for q in monomials] for p in monomials],
                  cols=len(monomials))
    half = as_scalar("-1/2")
    rhs = []
    for i, j in _index_pairs(space.dim):
        image = alpha.matrix.col(j)
        rhs.append(half * pair(space, space.basis_vector(i), image))
    coeffs = solve_linear(gram, Matrix.column(rhs))
    total = PolyElement.zero(space)
    for k, mono in enumerate(monomials):
        c = coeffs[k, 0]
        if c != 0:
            total = total + c * mono
    return QuadraticElement(total)


def derivation_action(alpha: SpElement, a: PolyElement) -> PolyElement:
    """Extension of the matrix ``alpha`` to a degree-preserving derivation of
    the commutative product, acting on linear elements as the matrix does."""
    space = alpha.space
    if a.space != space:
        raise DimensionMismatch("polynomial lives on a different space")
    images = [PolyElement.from_vector(space, alpha.matrix.col(i)) for i in range(space.dim)]
    total = PolyElement.zero(space)
    for exp, coeff in a.terms.items():
        for i, k in enumerate(exp):
            if k == 0 or images[i].is_zero():
                continue
            rest = exp[:i] + (k - 1,) + exp[i + 1:]
            total = total + (coeff * k) * sym_product(images[i], PolyElement.monomial(space, rest, 1))
    return total


def trace_ratio_constant(space: SymplecticSpace) -> Scalar:
    """The constant c with (w, z) = c tr(A(w) A(z)) for all quadratics w, z,
    where A is ``quadratic_to_sp``.

    Fitted on the first monomial pair with nonzero trace pairing and then
    verified against the full monomial spanning set; raises
    ``InconsistentRatio`` if any pair disagrees, which would mean the two
    bilinear forms are not proportional.
    """
    if space.dim < 2:
        raise ValueError("the trace ratio needs a space of dimension at least 2")
    monomials = quadratic_monomials(space)
    mats = [quadratic_to_sp(QuadraticElement(p)).matrix for p in monomials]
    constant: Scalar | None = None
    for p_idx in range(len(monomials)):
        for q_idx in range(len(monomials)):
            t = (mats[p_idx] * mats[q_idx]).trace()
            if t != 0:
                constant = bilinear_form(monomials[p_idx], monomials[q_idx]) / t
                break
        if constant is not None:
            break
    if constant is None:
        raise InconsistentRatio("trace pairing vanishes identically")
    for p_idx in range(len(monomials)):
        for q_idx in range(len(monomials)):
            lhs = bilinear_form(monomials[p_idx], monomials[q_idx])
            rhs = constant * (mats[p_idx] * mats[q_idx]).trace()
            if lhs != rhs:
                raise InconsistentRatio(
                    f"pairing and trace form disagree on monomial pair ({p_idx}, {q_idx})")
    return constant
