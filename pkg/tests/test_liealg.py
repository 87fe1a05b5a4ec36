from fractions import Fraction

import pytest

from superweyl.exactla import DimensionMismatch, Matrix
from superweyl.liealg import (FormNotInvariant, FormSingular, JacobiFails,
                              NotAntisymmetric, QuadraticLieAlgebra,
                              casimir_pairs, validate_lie)

SL2_FORM = Matrix([[2, 0, 0], [0, 0, 1], [0, 1, 0]])
SL2_ENTRIES = [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)]


def sl2():
    return QuadraticLieAlgebra.from_sparse(3, SL2_ENTRIES, SL2_FORM)


def test_sl2_structure():
    g = sl2()
    assert g.bracket(0, 1) == (0, 2, 0)
    assert g.bracket(1, 0) == (0, -2, 0)
    assert g.bracket(1, 2) == (1, 0, 0)
    validate_lie(g)


def test_bracket_vectors_bilinear():
    g = sl2()
    h = (Fraction(1), Fraction(0), Fraction(0))
    e = (Fraction(0), Fraction(1), Fraction(0))
    f = (Fraction(0), Fraction(0), Fraction(1))
    ef = g.bracket_vectors(e, f)
    assert ef == (1, 0, 0)
    combo = tuple(2 * a + 3 * b for a, b in zip(e, f))
    assert g.bracket_vectors(h, combo) == (0, 4, -6)


def test_form_value():
    g = sl2()
    e = (Fraction(0), Fraction(1), Fraction(0))
    f = (Fraction(0), Fraction(0), Fraction(1))
    assert g.form_value(e, f) == 1
    assert g.form_value(e, e) == 0


def test_abelian_validates():
    validate_lie(QuadraticLieAlgebra.abelian(3))
    validate_lie(QuadraticLieAlgebra.abelian(0))
    validate_lie(QuadraticLieAlgebra.abelian(2, Matrix.diagonal([1, -1])))


def test_from_sparse_requires_lower_index_first():
    with pytest.raises(ValueError):
        QuadraticLieAlgebra.from_sparse(2, [(1, 0, 0, 1)], Matrix.identity(2))
    with pytest.raises(IndexError):
        QuadraticLieAlgebra.from_sparse(2, [(0, 1, 5, 1)], Matrix.identity(2))


def test_from_sparse_accumulates_duplicates():
    g = QuadraticLieAlgebra.from_sparse(
        2, [(0, 1, 0, 1), (0, 1, 0, 2)], Matrix.identity(2))
    assert g.bracket(0, 1) == (3, 0)


def test_antisymmetry_violation_detected():
    table = [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]
    frozen = tuple(tuple(tuple(Fraction(x) for x in v) for v in row) for row in table)
    g = QuadraticLieAlgebra(2, frozen, Matrix.identity(2))
    with pytest.raises(NotAntisymmetric):
        validate_lie(g)


def test_jacobi_violation_detected():
    g = QuadraticLieAlgebra.from_sparse(
        3, [(0, 1, 2, 1), (0, 2, 0, 1)], Matrix.identity(3))
    with pytest.raises(JacobiFails) as info:
        validate_lie(g)
    assert info.value.triple == (0, 1, 2)


def test_asymmetric_or_singular_form_detected():
    g = QuadraticLieAlgebra.abelian(2, Matrix([[0, 1], [0, 0]]))
    with pytest.raises(FormSingular):
        validate_lie(g)
    g = QuadraticLieAlgebra.abelian(2, Matrix.zeros(2, 2))
    with pytest.raises(FormSingular):
        validate_lie(g)


def test_noninvariant_form_detected():
    g = QuadraticLieAlgebra.from_sparse(3, SL2_ENTRIES, Matrix.identity(3))
    with pytest.raises(FormNotInvariant):
        validate_lie(g)


def test_shape_errors():
    with pytest.raises(DimensionMismatch):
        QuadraticLieAlgebra(2, ((), ()), Matrix.identity(2))
    with pytest.raises(DimensionMismatch):
        QuadraticLieAlgebra.from_sparse(2, [], Matrix.identity(3))


def test_casimir_pairs_sl2():
    pairs = casimir_pairs(sl2()).pairs
    assert pairs[0] == (0, (Fraction(1, 2), 0, 0))
    assert pairs[1] == (1, (0, 0, 1))
    assert pairs[2] == (2, (0, 1, 0))
    # duality against the form
    g = sl2()
    for i, dual in pairs:
        for j in range(3):
            unit = tuple(Fraction(1 if t == j else 0) for t in range(3))
            assert g.form_value(unit, dual) == (1 if i == j else 0)


def test_casimir_pairs_scale_inversely_with_form():
    g = sl2()
    scaled = QuadraticLieAlgebra(g.dim, g.brackets, 3 * g.form)
    validate_lie(scaled)
    for (i, dual), (si, sdual) in zip(casimir_pairs(g).pairs,
                                      casimir_pairs(scaled).pairs):
        assert i == si
        assert tuple(3 * x for x in sdual) == dual


def test_casimir_pairs_need_nonsingular_form():
    with pytest.raises(FormSingular):
        casimir_pairs(QuadraticLieAlgebra.abelian(2, Matrix.zeros(2, 2)))
