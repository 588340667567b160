"""Column-style Hermite normal form and Smith normal form.

The Hermite form here is the lower-triangular one reached by column
operations, ``A = H @ U`` with ``U`` unimodular. Row ``m`` of ``H`` has a
positive diagonal entry and every entry to its left lies in
``[0, H[m][m])``. Two nonsingular matrices generate the same column lattice
(are right associates) exactly when their Hermite forms coincide.
"""
from dataclasses import dataclass
from typing import List, Tuple

from .core import IntMatrix, _check_square, determinant
from .errors import DimensionMismatchError, SingularMatrixError
from .primes import is_prime


@dataclass(frozen=True)
class HnfDecomposition:
    h: IntMatrix
    u: IntMatrix

    def to_json(self):
        return {"h": self.h.to_json(), "u": self.u.to_json()}


@dataclass(frozen=True)
class SnfDecomposition:
    u: IntMatrix
    lam: IntMatrix
    v: IntMatrix

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return self.lam.diagonal()

    def to_json(self):
        return {"u": self.u.to_json(), "lambda": self.lam.to_json(), "v": self.v.to_json()}


def _identity_rows(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def column_hnf(a: IntMatrix, track: bool = True):
    """Column HNF of a ``D x K`` matrix of full row rank ``D``.

    Returns ``(h, w, w_inv)`` as lists of rows, where ``a @ w = h`` and
    ``h @ w_inv = a``; ``w`` and ``w_inv`` are ``K x K`` unimodular and the
    last ``K - D`` columns of ``h`` are zero. With ``track=False`` only ``h``
    is computed and the transforms are ``None``.

    Raises SingularMatrixError when the rows are linearly dependent.
    """
    d, k = a.nrows, a.ncols
    h = a.tolist()
    w = _identity_rows(k) if track else None
    wi = _identity_rows(k) if track else None

    def sub_col(dst, src, q):
        # col_dst -= q * col_src ; rows above `src`'s pivot row are zero in col src
        for r in range(i, d):
            if h[r][src]:
                h[r][dst] -= q * h[r][src]
        if track:
            for row in w:
                if row[src]:
                    row[dst] -= q * row[src]
            rs, rd = wi[src], wi[dst]
            for c in range(k):
                if rd[c]:
                    rs[c] += q * rd[c]

    def swap_col(x, y):
        for row in h:
            row[x], row[y] = row[y], row[x]
        if track:
            for row in w:
                row[x], row[y] = row[y], row[x]
            wi[x], wi[y] = wi[y], wi[x]

    def neg_col(x):
        for row in h:
            row[x] = -row[x]
        if track:
            for row in w:
                row[x] = -row[x]
            wi[x] = [-c for c in wi[x]]

    for i in range(d):
        row = h[i]
        while True:
            nz = [c for c in range(i, k) if row[c]]
            if not nz:
                raise SingularMatrixError("matrix does not have full row rank")
            p = min(nz, key=lambda c: abs(row[c]))
            if p != i:
                swap_col(i, p)
            rest = [c for c in range(i + 1, k) if row[c]]
            if not rest:
                break
            for c in rest:
                sub_col(c, i, row[c] // row[i])
        if row[i] < 0:
            neg_col(i)
        piv = row[i]
        for n in range(i):
            q = row[n] // piv
            if q:
                sub_col(n, i, q)
    return h, w, wi


def hnf(a: IntMatrix) -> HnfDecomposition:
    """Canonical lower-triangular Hermite form ``a = h @ u`` of a nonsingular matrix."""
    _check_square(a)
    h, _, wi = column_hnf(a)
    return HnfDecomposition(IntMatrix(h), IntMatrix(wi))


def canonical_form(a: IntMatrix) -> IntMatrix:
    """Hermite form of ``a``; equal for ``a`` and ``a @ u`` whenever ``u`` is unimodular."""
    _check_square(a)
    h, _, _ = column_hnf(a, track=False)
    return IntMatrix(h)


def are_associates(a: IntMatrix, b: IntMatrix) -> bool:
    return canonical_form(a) == canonical_form(b)


def is_canonical_hnf(h: IntMatrix) -> bool:
    if not h.is_square:
        return False
    n = h.nrows
    for m in range(n):
        dm = h[m, m]
        if dm <= 0:
            return False
        if any(h[m, c] for c in range(m + 1, n)):
            return False
        if any(not 0 <= h[m, c] < dm for c in range(m)):
            return False
    return True


def is_prime_hnf_shape(h: IntMatrix) -> bool:
    """Whether a canonical Hermite form has the shape every prime matrix has.

    That is: identity except for one row ``m0`` whose diagonal entry is a
    rational prime, whose left part is reduced modulo that prime, and whose
    right part is zero. Unimodular forms (the identity) do not qualify.
    """
    if not is_canonical_hnf(h):
        raise ValueError("input is not a canonical Hermite normal form")
    n = h.nrows
    pivots = [m for m in range(n) if h[m, m] != 1]
    if len(pivots) != 1:
        return False
    m0 = pivots[0]
    if not is_prime(h[m0, m0]):
        return False
    for m in range(n):
        if m != m0 and any(h[m, c] for c in range(m)):
            return False
    return True


def snf(a: IntMatrix) -> SnfDecomposition:
    """Smith form ``a = u @ lam @ v`` with ``u``, ``v`` unimodular.

    Works for any ``D x K`` integer matrix. The pivot is always the nonzero
    entry of least absolute value in the active block, first in row-major
    order on ties, so the witnesses are reproducible.
    """
    d, k = a.nrows, a.ncols
    s = a.tolist()
    u = _identity_rows(d)
    v = _identity_rows(k)

    def row_axpy(dst, src, q):
        # row_dst += q * row_src on s ; u <- u @ E^-1
        if q == 0:
            return
        rs, rd = s[src], s[dst]
        for c in range(k):
            if rs[c]:
                rd[c] += q * rs[c]
        for row in u:
            if row[dst]:
                row[src] -= q * row[dst]

    def col_axpy(dst, src, q):
        # col_dst += q * col_src on s ; v <- F^-1 @ v
        if q == 0:
            return
        for row in s:
            if row[src]:
                row[dst] += q * row[src]
        vs, vd = v[src], v[dst]
        for c in range(k):
            if vd[c]:
                vs[c] -= q * vd[c]

    def swap_rows(x, y):
        s[x], s[y] = s[y], s[x]
        for row in u:
            row[x], row[y] = row[y], row[x]

    def swap_cols(x, y):
        for row in s:
            row[x], row[y] = row[y], row[x]
        v[x], v[y] = v[y], v[x]

    for t in range(min(d, k)):
        best = None
        for r in range(t, d):
            for c in range(t, k):
                x = s[r][c]
                if x and (best is None or abs(x) < abs(s[best[0]][best[1]])):
                    best = (r, c)
        if best is None:
            break
        while True:
            r, c = best
            if r != t:
                swap_rows(t, r)
            if c != t:
                swap_cols(t, c)
            piv = s[t][t]
            for r in range(t + 1, d):
                if s[r][t]:
                    row_axpy(r, t, -(s[r][t] // piv))
            for c in range(t + 1, k):
                if s[t][c]:
                    col_axpy(c, t, -(s[t][c] // piv))
            best = None
            for r in range(t + 1, d):
                if s[r][t] and (best is None or abs(s[r][t]) < abs(s[best[0]][best[1]])):
                    best = (r, t)
            for c in range(t + 1, k):
                if s[t][c] and (best is None or abs(s[t][c]) < abs(s[best[0]][best[1]])):
                    best = (t, c)
            if best is not None:
                continue
            bad = next(
                (r for r in range(t + 1, d) for c in range(t + 1, k) if s[r][c] % piv),
                None,
            )
            if bad is None:
                break
            row_axpy(t, bad, 1)
            best = (t, t)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            for row in u:
                row[t] = -row[t]
    return SnfDecomposition(IntMatrix(u), IntMatrix(s), IntMatrix(v))


def invariant_factors(a: IntMatrix) -> Tuple[int, ...]:
    return snf(a).invariant_factors


def hnf_det(a: IntMatrix) -> int:
    """``|det a|`` read off the Hermite diagonal (cross-check for Bareiss)."""
    h = canonical_form(a)
    out = 1
    for x in h.diagonal():
        out *= x
    return out


def check_hnf(a: IntMatrix, dec: HnfDecomposition) -> None:
    """Assert-style validation used by tests and the CLI self-checks."""
    if dec.h @ dec.u != a:
        raise AssertionError("h @ u != a")
    if abs(determinant(dec.u)) != 1:
        raise AssertionError("u is not unimodular")
    if not is_canonical_hnf(dec.h):
        raise AssertionError("h is not canonical")


def require_nonsingular(*ms: IntMatrix) -> int:
    dims = {_check_square(m) for m in ms}
    if len(dims) != 1:
        raise DimensionMismatchError(f"matrices of different dimensions {sorted(dims)}")
    for m in ms:
        if determinant(m) == 0:
            raise SingularMatrixError("singular matrix")
    return dims.pop()
