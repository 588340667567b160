"""Exact integer matrices and vectors.

All arithmetic is on Python ints, so nothing overflows and nothing is ever
rounded. Rationals, where they are needed (inverse application), are
:class:`fractions.Fraction`.
"""
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import DimensionMismatchError, SingularMatrixError

IntVector = Tuple[int, ...]


class IntMatrix:
    """Immutable integer matrix with exact arithmetic.

    Square matrices are the normal operand. Rectangular ones exist only for
    the internal ``D x kD`` block concatenations (gcld, Bezout, lcrm).
    """

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(_as_int(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise DimensionMismatchError("matrix must have at least one row and column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatchError("ragged rows")
        self._rows = rows
        self.nrows = len(rows)
        self.ncols = width

    @classmethod
    def identity(cls, dim: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(dim)] for i in range(dim)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int = None) -> "IntMatrix":
        ncols = nrows if ncols is None else ncols
        return cls([[0] * ncols for _ in range(nrows)])

    @classmethod
    def diag(cls, *entries: int) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        return self._rows

    @property
    def dim(self) -> int:
        if self.nrows != self.ncols:
            raise DimensionMismatchError(f"{self.nrows}x{self.ncols} matrix has no single dimension")
        return self.nrows

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx):
        i, j = idx
        return self._rows[i][j]

    def row(self, i: int) -> IntVector:
        return self._rows[i]

    def col(self, j: int) -> IntVector:
        return tuple(r[j] for r in self._rows)

    def tolist(self):
        return [list(r) for r in self._rows]

    def to_json(self):
        return {"rows": self.tolist()}

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self._rows))

    T = property(transpose)

    def diagonal(self) -> IntVector:
        return tuple(self._rows[i][i] for i in range(min(self.shape)))

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "IntMatrix":
        return IntMatrix(r[c0:c1] for r in self._rows[r0:r1])

    def hstack(self, *others: "IntMatrix") -> "IntMatrix":
        for o in others:
            if o.nrows != self.nrows:
                raise DimensionMismatchError("hstack needs equal row counts")
        return IntMatrix(
            sum((o._rows[i] for o in others), self._rows[i]) for i in range(self.nrows)
        )

    def __eq__(self, other):
        if isinstance(other, IntMatrix):
            return self._rows == other._rows
        return NotImplemented

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return f"IntMatrix({self.tolist()!r})"

    def __str__(self):
        return format_matrix(self)

    def __neg__(self):
        return IntMatrix([-x for x in r] for r in self._rows)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        _check_same_shape(self, other)
        return IntMatrix(
            [a + b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        _check_same_shape(self, other)
        return IntMatrix(
            [a - b for a, b in zip(ra, rb)] for ra, rb in zip(self._rows, other._rows)
        )

    def __mul__(self, k: int) -> "IntMatrix":
        if not isinstance(k, int):
            return NotImplemented
        return IntMatrix([k * x for x in r] for r in self._rows)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise DimensionMismatchError(
                    f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
                )
            cols = list(zip(*other._rows))
            return IntMatrix(
                [sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._rows
            )
        if isinstance(other, (tuple, list)):
            return apply(self, other)
        return NotImplemented

    def det(self) -> int:
        return determinant(self)


def _as_int(x) -> int:
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return int(x)
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    # numpy integer scalars and similar
    if hasattr(x, "__index__"):
        return x.__index__()
    raise TypeError(f"non-integer matrix entry {x!r}")


def _check_same_shape(a: IntMatrix, b: IntMatrix) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shape {a.shape} != {b.shape}")


def _check_square(a: IntMatrix) -> int:
    if not a.is_square:
        raise DimensionMismatchError(f"expected a square matrix, got {a.nrows}x{a.ncols}")
    return a.nrows


def as_matrix(a) -> IntMatrix:
    return a if isinstance(a, IntMatrix) else IntMatrix(a)


def as_vector(v: Iterable[int]) -> IntVector:
    return tuple(_as_int(x) for x in v)


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product of two square matrices of equal dimension."""
    if _check_square(a) != _check_square(b):
        raise DimensionMismatchError(f"dimension {a.dim} != {b.dim}")
    return a @ b


def mat_product(factors: Sequence[IntMatrix], dim: int = None) -> IntMatrix:
    """Left-to-right product of ``factors`` (identity of ``dim`` if empty)."""
    if not factors:
        if dim is None:
            raise ValueError("empty product needs an explicit dim")
        return IntMatrix.identity(dim)
    out = factors[0]
    for f in factors[1:]:
        out = out @ f
    return out


def apply(a: IntMatrix, v: Sequence[int]) -> IntVector:
    """Matrix-vector product ``a @ v``."""
    if len(v) != a.ncols:
        raise DimensionMismatchError(f"vector length {len(v)} != {a.ncols}")
    return tuple(sum(x * y for x, y in zip(r, v)) for r in a.rows)


def determinant(a: IntMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every division in the elimination is exact, so intermediates stay
    integral and bounded by minors of ``a``.
    """
    n = _check_square(a)
    m = a.tolist()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - mik * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def is_unimodular(a: IntMatrix) -> bool:
    return abs(determinant(a)) == 1


def inverse(a: IntMatrix):
    """Exact inverse as a list of rows of :class:`Fraction` (Gauss-Jordan)."""
    n = _check_square(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a.rows)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        m[c], m[p] = m[p], m[c]
        inv_piv = 1 / m[c][c]
        m[c] = [x * inv_piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def adjugate(a: IntMatrix) -> IntMatrix:
    """Integer adjugate, ``adj(a) = det(a) * a^-1``; zero-safe only for nonsingular ``a``."""
    d = determinant(a)
    if d == 0:
        raise SingularMatrixError("adjugate of a singular matrix is not computed here")
    return IntMatrix([int(x * d) for x in row] for row in inverse(a))


def solve_exact(a: IntMatrix, v: Sequence[int]) -> Tuple[Fraction, ...]:
    """Exact rational solution ``x`` of ``a @ x = v``."""
    n = _check_square(a)
    if len(v) != n:
        raise DimensionMismatchError(f"vector length {len(v)} != {n}")
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(a.rows, v)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        m[c], m[p] = m[p], m[c]
        for r in range(c + 1, n):
            if m[r][c] != 0:
                f = m[r][c] / m[c][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        s = m[r][n] - sum(m[r][j] * x[j] for j in range(r + 1, n))
        x[r] = s / m[r][r]
    return tuple(x)


def is_left_divisor(a: IntMatrix, m: IntMatrix) -> bool:
    """True iff ``a^-1 @ m`` is an integer matrix."""
    if _check_square(a) != m.nrows:
        raise DimensionMismatchError("row counts differ")
    if determinant(a) == 0:
        raise SingularMatrixError("a left divisor must be nonsingular")
    for j in range(m.ncols):
        if any(x.denominator != 1 for x in solve_exact(a, m.col(j))):
            return False
    return True


def format_matrix(a: IntMatrix) -> str:
    width = max(len(str(x)) for r in a.rows for x in r)
    return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in a.rows)
