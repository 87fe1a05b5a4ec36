"""Exact rational scalars and dense linear algebra over the rationals.

Everything downstream reduces to linear algebra over Q: expanding a matrix
in a basis, inverting a Gram matrix, solving for dual bases.  All of it is
done with ``fractions.Fraction`` entries and naive Gaussian elimination.
There is deliberately no floating point anywhere; the decision procedure
rests on exact vanishing tests, and a tolerance would turn a theorem into
a heuristic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Scalar = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class LinAlgError(Exception):
    """Base class for exact linear algebra failures."""


class SingularMatrix(LinAlgError):
    """A matrix that must be invertible is not."""


class DimensionMismatch(LinAlgError):
    """Operand shapes are incompatible."""


def as_scalar(value: Scalar | int | str) -> Scalar:
    """Coerce ``value`` to an exact rational.

    Accepts Fractions, ints and strings like ``"-3/8"``.  Floats are
    rejected on purpose: converting one silently would smuggle rounding
    error into computations that rely on exact equality.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) or isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class Matrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(as_scalar(x) for x in row) for row in entries)
        rows = len(data)
        if rows:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise DimensionMismatch("ragged rows in matrix literal")
            if cols is not None and cols != width:
                raise DimensionMismatch("declared column count does not match rows")
            cols = width
        elif cols is None:
            cols = 0
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls([[_ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def diagonal(cls, values: Sequence) -> "Matrix":
        vals = [as_scalar(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else _ZERO for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        return cls([[as_scalar(v)] for v in values], cols=1)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> "Matrix":
        cols = [tuple(as_scalar(v) for v in c) for c in columns]
        if cols:
            rows = len(cols[0])
            if any(len(c) != rows for c in cols):
                raise DimensionMismatch("columns of unequal length")
        elif rows is None:
            rows = 0
        return cls([[c[i] for c in cols] for i in range(rows)], cols=len(cols))

    def __getitem__(self, key: tuple[int, int]) -> Scalar:
        i, j = key
        return self.data[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.data[i]

    def col(self, j: int) -> tuple[Scalar, ...]:
        return tuple(self.data[i][j] for i in range(self.rows))

    def columns(self) -> list[tuple[Scalar, ...]]:
        return [self.col(j) for j in range(self.cols)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def transpose(self) -> "Matrix":
        return Matrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
                      cols=self.rows)

    def trace(self) -> Scalar:
        if not self.is_square():
            raise DimensionMismatch("trace of a non-square matrix")
        return sum((self.data[i][i] for i in range(self.rows)), _ZERO)

    def apply(self, vec: Sequence) -> tuple[Scalar, ...]:
        """Matrix-vector product, returning a coordinate tuple."""
        v = [as_scalar(x) for x in vec]
        if len(v) != self.cols:
            raise DimensionMismatch(f"cannot apply {self.rows}x{self.cols} matrix to length-{len(v)} vector")
        return tuple(sum((self.data[i][j] * v[j] for j in range(self.cols)), _ZERO)
                     for i in range(self.rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
                      cols=self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.data, other.data)],
                      cols=self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in row] for row in self.data], cols=self.cols)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            return Matrix([[sum((self.data[i][k] * other.data[k][j] for k in range(self.cols)), _ZERO)
                            for j in range(other.cols)] for i in range(self.rows)],
                          cols=other.cols)
        return Matrix([[a * as_scalar(other) for a in row] for row in self.data], cols=self.cols)

    def __rmul__(self, other):
        return Matrix([[as_scalar(other) * a for a in row] for row in self.data], cols=self.cols)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.data == other.data)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        rows = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.data)
        return f"Matrix([{rows}])"

    def _same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def solve_linear(a: Matrix, b: Matrix) -> Matrix:
    """Solve ``a x = b`` for square nonsingular ``a`` by Gauss-Jordan elimination.

    ``b`` may have any number of columns; the result has the same shape as
    ``b``.  Raises ``SingularMatrix`` when ``a`` has no unique solution.
    """
    if not a.is_square():
        raise DimensionMismatch("coefficient matrix must be square")
    if b.rows != a.rows:
        raise DimensionMismatch("right-hand side has wrong number of rows")
    n = a.rows
    width = b.cols
    aug = [list(a.row(i)) + list(b.row(i)) for i in range(n)]
    for col in range(n):
        # over Q any nonzero pivot is exact, so the first one will do
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix(f"no pivot available in column {col}")
        if pivot != col:
            aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = _ONE / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return Matrix([row[n:] for row in aug], cols=width)


def invert(a: Matrix) -> Matrix:
    """Exact inverse of a square nonsingular matrix."""
    if not a.is_square():
        raise DimensionMismatch("only square matrices can be inverted")
    return solve_linear(a, Matrix.identity(a.rows))


def _rref(a: Matrix) -> tuple[list[list[Scalar]], list[int]]:
    m = [list(a.row(i)) for i in range(a.rows)]
    pivots: list[int] = []
    r = 0
    for c in range(a.cols):
        if r == a.rows:
            break
        pr = next((i for i in range(r, a.rows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = _ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(a.rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(a: Matrix) -> int:
    return len(_rref(a)[1])


def kernel_basis(a: Matrix) -> list[Matrix]:
    """Basis of the null space of ``a`` as column matrices.

    Deterministic: one basis column per free variable, in increasing
    column order, with a unit entry in the free position.
    """
    m, pivots = _rref(a)
    free = [c for c in range(a.cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [_ZERO] * a.cols
        vec[f] = _ONE
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -m[row_idx][f]
        basis.append(Matrix.column(vec))
    return basis


def solve_overdetermined(a: Matrix, b: Matrix) -> Matrix:
    """Solve ``a x = b`` exactly where ``a`` is tall with full column rank.

    Raises ``SingularMatrix`` when the columns of ``a`` are dependent and
    ``LinAlgError`` when the system is inconsistent.
    """
    if b.rows != a.rows:
        raise DimensionMismatch("right-hand side has wrong number of rows")
    aug = Matrix([list(a.row(i)) + list(b.row(i)) for i in range(a.rows)],
                 cols=a.cols + b.cols)
    m, pivots = _rref(aug)
    if any(p >= a.cols for p in pivots):
        raise LinAlgError("inconsistent system: no exact solution")
    if len(pivots) < a.cols:
        raise SingularMatrix("coefficient columns are linearly dependent")
    sol = [[_ZERO] * b.cols for _ in range(a.cols)]
    for row_idx, pc in enumerate(pivots):
        sol[pc] = m[row_idx][a.cols:]
    return Matrix(sol, cols=b.cols)


def in_span(columns: Sequence[Sequence[Scalar]], vec: Sequence[Scalar]) -> bool:
    """Whether ``vec`` lies in the span of the given column vectors."""
    cols = list(columns)
    if not cols:
        return all(x == 0 for x in vec)
    a = Matrix.from_columns(cols)
    stacked = Matrix.from_columns(cols + [tuple(vec)])
    return rank(a) == rank(stacked)
