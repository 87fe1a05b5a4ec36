"""Decide whether a quadratic Lie algebra with a symplectic representation
extends to a Lie superalgebra with an invariant supersymmetric form.

Given an even algebra g0 with invariant form B and a representation nu of
g0 on a symplectic space v, there is at most one way to put a Lie
superalgebra structure on g0 + v compatible with nu and with the direct-sum
form.  The test is computed entirely inside the polynomial model of the
noncommutative algebra on v:

1. lift each nu(x_i) to a quadratic polynomial (``quadratic_lift``),
2. push the Casimir element of g0 through the lift (``casimir_image``);
   the image decomposes into a degree-four part plus a constant,
3. the extension exists exactly when the degree-four part vanishes; the
   constant is then the Casimir scalar, and the odd-odd bracket is
   recovered as ``[y, y'] = 2 quadratic_lift_adjoint(y.y')``.

When the degree-four obstruction is nonzero, the candidate bracket still
exists but fails the odd-odd-odd super Jacobi identity, and the failure is
measured exactly by contracting the obstruction three times
(``jacobiator``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exactla import Matrix, Scalar, as_scalar
from .liealg import QuadraticLieAlgebra, casimir_pairs
from .spbridge import (NotSymplectic, QuadraticElement, SpElement,
                       sp_to_quadratic, trace_ratio_constant)
from .symplectic import SymplecticSpace, Vector, is_in_sp
from .weyl import (GradedDecomposition, PolyElement, bilinear_form, constant_term,
                   contract, grade, weyl_product)

_ZERO = as_scalar(0)


class NotARepresentation(Exception):
    def __init__(self, i: int, j: int, detail: str | None = None):
        self.pair = (i, j)
        super().__init__(
            detail or f"matrix commutator disagrees with the bracket on basis pair ({i}, {j})")


class InternalDegreeLeak(Exception):
    """The Casimir image acquired a component in degree 1, 2 or 3.

    This cannot happen for valid input; it signals a bug, not bad data.
    """

    def __init__(self, degree: int):
        self.degree = degree
        super().__init__(f"Casimir image has an impossible degree-{degree} component")


class NotSuperLieType(Exception):
    """Construction was requested but the degree-four obstruction is nonzero."""

    def __init__(self, obstruction: PolyElement):
        self.obstruction = obstruction
        super().__init__("no Lie superalgebra extension exists; "
                         f"degree-four obstruction has {len(obstruction.terms)} terms")


class IdentityViolated(Exception):
    """An identity that should hold exactly failed; signals a bug."""


@dataclass(frozen=True)
class SymplecticRep:
    """A quadratic Lie algebra acting on a symplectic space.

    ``matrices[i]`` is the action of basis element i.  Construction checks
    shapes; ``validate_rep`` checks the symmetry condition and the
    representation property.
    """

    algebra: QuadraticLieAlgebra
    space: SymplecticSpace
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.matrices) != self.algebra.dim:
            raise ValueError("need one matrix per basis element of the algebra")
        for m in self.matrices:
            if m.rows != self.space.dim or m.cols != self.space.dim:
                raise ValueError("representation matrices must be square of the space dimension")


def validate_rep(rep: SymplecticRep) -> None:
    """Check that every matrix preserves the form and that matrix
    commutators realize the bracket table."""
    for i, m in enumerate(rep.matrices):
        if not is_in_sp(rep.space, m):
            raise NotSymplectic(index=i)
    k = rep.algebra.dim
    for i in range(k):
        for j in range(i + 1, k):
            commutator = rep.matrices[i] * rep.matrices[j] - rep.matrices[j] * rep.matrices[i]
            expected = Matrix.zeros(rep.space.dim, rep.space.dim)
            for l, c in enumerate(rep.algebra.bracket(i, j)):
                if c != 0:
                    expected = expected + c * rep.matrices[l]
            if commutator != expected:
                raise NotARepresentation(i, j)


def quadratic_lift(rep: SymplecticRep, i: int) -> QuadraticElement:
    """The quadratic polynomial acting on v as nu(x_i) does."""
    return sp_to_quadratic(SpElement(rep.space, rep.matrices[i]))


def _lift_polys(rep: SymplecticRep) -> list[PolyElement]:
    return [quadratic_lift(rep, i).poly for i in range(rep.algebra.dim)]


def quadratic_lift_adjoint(rep: SymplecticRep, w: QuadraticElement,
                           lifts: Sequence[PolyElement] | None = None) -> tuple[Scalar, ...]:
    """The element t of g0 with B(x_i, t) = (lift(x_i), w) for all i.

    This is the transpose of the quadratic lift against the two invariant
    forms; it intertwines the actions on quadratics and on g0.
    """
    from .exactla import solve_linear  # local import keeps module surface tidy
    if lifts is None:
        lifts = _lift_polys(rep)
    rhs = [bilinear_form(lift, w.poly) for lift in lifts]
    sol = solve_linear(rep.algebra.form, Matrix.column(rhs))
    return sol.col(0)


def casimir_image(rep: SymplecticRep) -> GradedDecomposition:
    """Image of the Casimir element of g0 under the quadratic lift, using
    dual bases for the form.  The result always lies in degree four plus a
    constant; components in degrees 1 to 3 raise ``InternalDegreeLeak``."""
    lifts = _lift_polys(rep)
    pairs = casimir_pairs(rep.algebra)
    total = PolyElement.zero(rep.space)
    for i, dual in pairs.pairs:
        dual_lift = PolyElement.zero(rep.space)
        for j, c in enumerate(dual):
            if c != 0:
                dual_lift = dual_lift + c * lifts[j]
        total = total + weyl_product(lifts[i], dual_lift)
    decomposition = grade(total)
    for d in decomposition.degrees():
        if d not in (0, 4):
            raise InternalDegreeLeak(d)
    return decomposition


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None


@dataclass(frozen=True)
class TestReport:
    """Outcome of the decision procedure.

    ``casimir_scalar`` is present exactly when ``verdict`` is true;
    ``obstruction`` is the degree-four component of the Casimir image
    (zero in the positive case)."""

    verdict: bool
    casimir_scalar: Scalar | None
    obstruction: PolyElement
    diagnostics: tuple[CheckResult, ...]


def decide(rep: SymplecticRep) -> TestReport:
    """Run the decision procedure; see the module docstring."""
    image = casimir_image(rep)
    obstruction = image.component(4)
    verdict = obstruction.is_zero()
    scalar = constant_term(image.component(0)) if verdict else None
    diagnostics = [CheckResult("degree_confinement", True)]
    if rep.space.dim >= 2:
        c = trace_ratio_constant(rep.space)
        diagnostics.append(CheckResult("trace_ratio_fitted", True, str(c)))
        diagnostics.append(CheckResult("trace_ratio_magnitude_eighth",
                                       abs(c) == as_scalar("1/8"), "1/8"))
        if verdict:
            rhs = c * _dual_trace_sum(rep)
            diagnostics.append(CheckResult("trace_identity", scalar == rhs, str(rhs)))
    return TestReport(verdict, scalar, obstruction, tuple(diagnostics))


def _dual_trace_sum(rep: SymplecticRep) -> Scalar:
    total = _ZERO
    for i, dual in casimir_pairs(rep.algebra).pairs:
        dual_matrix = Matrix.zeros(rep.space.dim, rep.space.dim)
        for j, c in enumerate(dual):
            if c != 0:
                dual_matrix = dual_matrix + c * rep.matrices[j]
        total += (rep.matrices[i] * dual_matrix).trace()
    return total


def trace_identity_check(rep: SymplecticRep) -> tuple[Scalar, Scalar, Scalar]:
    """For a positive instance, the Casimir scalar must equal the fitted
    trace-ratio constant times the trace of the Casimir in the matrix
    representation.  Returns (scalar, product, constant); raises
    ``IdentityViolated`` on mismatch."""
    report = decide(rep)
    if not report.verdict:
        raise ValueError("trace identity only applies to positive instances")
    c = trace_ratio_constant(rep.space)
    rhs = c * _dual_trace_sum(rep)
    if report.casimir_scalar != rhs:
        raise IdentityViolated(
            f"Casimir scalar {report.casimir_scalar} != {c} * trace sum ({rhs})")
    return report.casimir_scalar, rhs, c


# -- the superalgebra structure --------------------------------------------


@dataclass(frozen=True)
class SuperAlgebraData:
    """Bracket tables and Gram matrices of a Lie superalgebra on g0 + v.

    ``even_odd[i]`` is the matrix action of even basis element i on the odd
    space; ``odd_odd`` maps unordered index pairs (a <= b) to coordinates in
    g0 of the symmetric odd bracket.
    """

    even: QuadraticLieAlgebra
    odd_dim: int
    even_odd: tuple[Matrix, ...]
    odd_odd: dict[tuple[int, int], tuple[Scalar, ...]]
    form_even: Matrix
    form_odd: Matrix

    def odd_bracket(self, a: int, b: int) -> tuple[Scalar, ...]:
        key = (a, b) if a <= b else (b, a)
        return self.odd_odd.get(key, tuple([_ZERO] * self.even.dim))


def _pair_quadratic(space: SymplecticSpace, a: int, b: int) -> QuadraticElement:
    exp = [0] * space.dim
    exp[a] += 1
    exp[b] += 1
    return QuadraticElement(PolyElement.monomial(space, exp, 1))


def construct_superalgebra_unchecked(rep: SymplecticRep) -> SuperAlgebraData:
    """Assemble the candidate structure with [y_a, y_b] = 2 lift^t(y_a y_b)
    without testing the obstruction.  Diagnostic tool: on a negative
    instance the result fails exactly the odd-odd-odd Jacobi sector."""
    lifts = _lift_polys(rep)
    two = as_scalar(2)
    odd_odd: dict[tuple[int, int], tuple[Scalar, ...]] = {}
    for a in range(rep.space.dim):
        for b in range(a, rep.space.dim):
            w = _pair_quadratic(rep.space, a, b)
            t = quadratic_lift_adjoint(rep, w, lifts)
            odd_odd[(a, b)] = tuple(two * x for x in t)
    return SuperAlgebraData(
        even=rep.algebra,
        odd_dim=rep.space.dim,
        even_odd=tuple(rep.matrices),
        odd_odd=odd_odd,
        form_even=rep.algebra.form,
        form_odd=rep.space.omega,
    )


def construct_superalgebra(rep: SymplecticRep) -> SuperAlgebraData:
    """Construct the unique extension; raises ``NotSuperLieType`` with the
    degree-four obstruction when none exists."""
    report = decide(rep)
    if not report.verdict:
        raise NotSuperLieType(report.obstruction)
    return construct_superalgebra_unchecked(rep)


# Homogeneous elements are tagged (parity, coordinates): parity 0 lives in
# g0, parity 1 in the odd space.
Homogeneous = tuple[int, tuple[Scalar, ...]]


def _super_bracket(s: SuperAlgebraData, x: Homogeneous, y: Homogeneous) -> Homogeneous:
    px, vx = x
    py, vy = y
    if px == 0 and py == 0:
        return (0, s.even.bracket_vectors(vx, vy))
    if px == 0 and py == 1:
        out = [_ZERO] * s.odd_dim
        for i, c in enumerate(vx):
            if c != 0:
                image = s.even_odd[i].apply(vy)
                out = [o + c * t for o, t in zip(out, image)]
        return (1, tuple(out))
    if px == 1 and py == 0:
        parity, vec = _super_bracket(s, y, x)
        return (parity, tuple(-t for t in vec))
    out_even = [_ZERO] * s.even.dim
    for a, ca in enumerate(vx):
        if ca == 0:
            continue
        for b, cb in enumerate(vy):
            if cb == 0:
                continue
            for l, c in enumerate(s.odd_bracket(a, b)):
                if c != 0:
                    out_even[l] += ca * cb * c
    return (0, tuple(out_even))


def _super_form(s: SuperAlgebraData, x: Homogeneous, y: Homogeneous) -> Scalar:
    px, vx = x
    py, vy = y
    if px != py:
        return _ZERO
    gram = s.form_even if px == 0 else s.form_odd
    total = _ZERO
    for i, xi in enumerate(vx):
        if xi == 0:
            continue
        row = gram.row(i)
        total += xi * sum((row[j] * vy[j] for j in range(len(vy))), _ZERO)
    return total


def _basis_elements(s: SuperAlgebraData) -> list[Homogeneous]:
    out: list[Homogeneous] = []
    for i in range(s.even.dim):
        out.append((0, tuple(as_scalar(1 if t == i else 0) for t in range(s.even.dim))))
    for a in range(s.odd_dim):
        out.append((1, tuple(as_scalar(1 if t == a else 0) for t in range(s.odd_dim))))
    return out


def _is_zero_h(x: Homogeneous) -> bool:
    return all(c == 0 for c in x[1])


def _add_h(x: Homogeneous, y: Homogeneous) -> Homogeneous:
    assert x[0] == y[0]
    return (x[0], tuple(a + b for a, b in zip(x[1], y[1])))


def _neg_h(x: Homogeneous) -> Homogeneous:
    return (x[0], tuple(-a for a in x[1]))


def verify_superalgebra(s: SuperAlgebraData) -> list[CheckResult]:
    """Check every axiom on basis elements: graded antisymmetry, the super
    Jacobi identity in all eight parity sectors, invariance and
    supersymmetry of the form, and nonsingularity of both Gram blocks.
    Each check reports the first violating tuple in iteration order."""
    basis = _basis_elements(s)
    checks: list[CheckResult] = []

    witness = None
    for x in basis:
        for y in basis:
            # [x,y] = -(-1)^{|x||y|} [y,x]
            sign = -1 if (x[0] and y[0]) else 1
            lhs = _super_bracket(s, x, y)
            rhs = _super_bracket(s, y, x)
            expected = (rhs[0], tuple(-sign * t for t in rhs[1]))
            if lhs != expected and witness is None:
                witness = (f"parities ({x[0]}, {y[0]}), "
                           f"indices ({_unit_index(x)}, {_unit_index(y)})")
    checks.append(CheckResult("graded_antisymmetry", witness is None, witness))

    for parities in [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1)]:
        name = "jacobi_" + "".join("eo"[p] for p in parities)
        witness = None
        dims = [s.even.dim if p == 0 else s.odd_dim for p in parities]
        for i in range(dims[0]):
            for j in range(dims[1]):
                for l in range(dims[2]):
                    x = _unit(parities[0], i, s)
                    y = _unit(parities[1], j, s)
                    z = _unit(parities[2], l, s)
                    lhs = _super_bracket(s, x, _super_bracket(s, y, z))
                    r1 = _super_bracket(s, _super_bracket(s, x, y), z)
                    r2 = _super_bracket(s, y, _super_bracket(s, x, z))
                    if parities[0] and parities[1]:
                        r2 = _neg_h(r2)
                    if lhs != _add_h(r1, r2) and witness is None:
                        witness = f"indices ({i}, {j}, {l})"
            if witness is not None:
                break
        checks.append(CheckResult(name, witness is None, witness))

    witness = form_invariance_witness(s)
    checks.append(CheckResult("form_invariance", witness is None, witness))

    sym_ok = s.form_even.transpose() == s.form_even
    alt_ok = s.form_odd.transpose() == -s.form_odd
    checks.append(CheckResult("form_supersymmetry", sym_ok and alt_ok,
                              None if sym_ok and alt_ok else "Gram symmetry pattern broken"))

    from .exactla import SingularMatrix, invert
    nonsingular = True
    try:
        invert(s.form_even)
        invert(s.form_odd)
    except SingularMatrix:
        nonsingular = False
    checks.append(CheckResult("form_nonsingular", nonsingular,
                              None if nonsingular else "a Gram block is singular"))
    return checks


def _unit(parity: int, index: int, s: SuperAlgebraData) -> Homogeneous:
    dim = s.even.dim if parity == 0 else s.odd_dim
    return (parity, tuple(as_scalar(1 if t == index else 0) for t in range(dim)))


def form_invariance_witness(s: SuperAlgebraData,
                            form_even: Matrix | None = None,
                            form_odd: Matrix | None = None) -> str | None:
    """First basis triple violating ([x,y], z) = -(-1)^{|x||y|} (y, [x,z]),
    or None.  Optional Gram overrides let callers test a different form
    against the same bracket tables."""
    probe = s
    if form_even is not None or form_odd is not None:
        probe = SuperAlgebraData(s.even, s.odd_dim, s.even_odd, s.odd_odd,
                                 form_even if form_even is not None else s.form_even,
                                 form_odd if form_odd is not None else s.form_odd)
    basis = _basis_elements(probe)
    for x in basis:
        for y in basis:
            sign = as_scalar(-1 if (x[0] and y[0]) else 1)
            for z in basis:
                lhs = _super_form(probe, _super_bracket(probe, x, y), z)
                rhs = -sign * _super_form(probe, y, _super_bracket(probe, x, z))
                if lhs != rhs:
                    return (f"parities ({x[0]}, {y[0]}, {z[0]}), indices "
                            f"({_unit_index(x)}, {_unit_index(y)}, {_unit_index(z)})")
    return None


def _unit_index(x: Homogeneous) -> int:
    return next(i for i, c in enumerate(x[1]) if c != 0)


def jacobiator(s: SuperAlgebraData, a: int, b: int, c: int) -> Vector:
    """Cyclic sum [y_a,[y_b,y_c]] + [y_b,[y_c,y_a]] + [y_c,[y_a,y_b]] for odd
    basis elements; the inner bracket lands in g0 and the outer one acts
    back on the odd space, so the result is an odd coordinate vector.
    Zero for every triple exactly when the odd-odd-odd Jacobi sector holds."""
    ya, yb, yc = (_unit(1, i, s) for i in (a, b, c))
    total = [_ZERO] * s.odd_dim
    for first, second, third in ((ya, yb, yc), (yb, yc, ya), (yc, ya, yb)):
        inner = _super_bracket(s, second, third)
        outer = _super_bracket(s, first, inner)
        total = [t + o for t, o in zip(total, outer[1])]
    return tuple(total)


def jacobiator_from_obstruction(rep: SymplecticRep, obstruction: PolyElement,
                                a: int, b: int, c: int) -> Vector:
    """The same cyclic sum computed from the other side: twice the triple
    contraction of the degree-four obstruction by the three basis vectors."""
    space = rep.space
    contracted = contract(space.basis_vector(c),
                          contract(space.basis_vector(b),
                                   contract(space.basis_vector(a), obstruction)))
    from .weyl import linear_coordinates
    coords = linear_coordinates(contracted)
    return tuple(as_scalar(2) * x for x in coords)
