"""Divisibility theory of nonsingular integer matrices.

Everything here is left-sided: ``A`` divides ``M`` when ``M = A @ X`` for an
integer ``X``, i.e. when the column lattice of ``M`` sits inside that of
``A``. Greatest common left divisors correspond to lattice sums and least
common right multiples to lattice intersections; both are returned as
canonical Hermite forms.
"""
from dataclasses import dataclass
from functools import reduce
from typing import List, Optional, Sequence, Tuple

from .core import IntMatrix, determinant, mat_product
from .errors import NotCoprimeError
from .normal_forms import canonical_form, column_hnf, require_nonsingular, snf
from .primes import PROVEN, certainty, factorize, is_prime


@dataclass(frozen=True)
class BezoutWitness:
    """``m @ p + n @ q == I``."""

    p: IntMatrix
    q: IntMatrix

    def to_json(self):
        return {"p": self.p.to_json(), "q": self.q.to_json()}


@dataclass(frozen=True)
class PrimeFactorization:
    """Ordered prime factors whose left-to-right product is the input.

    For a unimodular input ``factors`` is empty and ``unit`` holds the input.
    """

    factors: Tuple[IntMatrix, ...]
    unit: Optional[IntMatrix] = None
    certainty: str = PROVEN

    @property
    def is_unit(self) -> bool:
        return self.unit is not None

    @property
    def prime_dets(self) -> List[int]:
        return [abs(determinant(f)) for f in self.factors]

    def product(self) -> IntMatrix:
        if self.is_unit:
            return self.unit
        return mat_product(self.factors)

    def to_json(self):
        out = {"factors": [f.to_json() for f in self.factors]}
        if self.is_unit:
            out["unit"] = self.unit.to_json()
        if self.certainty != PROVEN:
            out["certainty"] = self.certainty
        return out


def is_prime_matrix(a: IntMatrix) -> bool:
    """A nonsingular matrix is prime iff ``|det a|`` is a rational prime.

    Unimodular matrices give False here; ask :func:`is_unimodular` for units.
    """
    require_nonsingular(a)
    return is_prime(abs(determinant(a)))


def matrix_primality_certainty(a: IntMatrix) -> str:
    return certainty(determinant(a))


def _block_hnf(ms: Sequence[IntMatrix], track: bool):
    d = require_nonsingular(*ms)
    block = ms[0].hstack(*ms[1:])
    h, w, wi = column_hnf(block, track=track)
    return d, h, w


def gcld(ms: Sequence[IntMatrix]) -> IntMatrix:
    """Greatest common left divisor as a canonical Hermite form."""
    if len(ms) < 2:
        raise ValueError("gcld needs at least two matrices")
    d, h, _ = _block_hnf(ms, track=False)
    return IntMatrix(row[:d] for row in h)


def are_coprime(m: IntMatrix, n: IntMatrix) -> bool:
    """Left coprimality: the gcld of ``m`` and ``n`` is unimodular.

    The gcld's Hermite diagonal multiplies to the product of the Smith
    invariant factors of ``(m | n)``, so this is the same as asking that those
    factors are all 1.
    """
    g = gcld([m, n])
    return all(x == 1 for x in g.diagonal())


def bezout(m: IntMatrix, n: IntMatrix) -> BezoutWitness:
    """``(p, q)`` with ``m @ p + n @ q == I``, read off the column transform
    that brings ``(m | n)`` to Hermite form ``(I | 0)``."""
    d, h, w = _block_hnf([m, n], track=True)
    if any(h[i][i] != 1 for i in range(d)):
        raise NotCoprimeError("matrices are not left coprime; no Bezout witness exists")
    p = IntMatrix(row[:d] for row in w[:d])
    q = IntMatrix(row[:d] for row in w[d:])
    return BezoutWitness(p, q)


def lcrm_pair(m: IntMatrix, n: IntMatrix) -> IntMatrix:
    """Least common right multiple of two matrices, canonical.

    The last ``D`` columns ``(x; y)`` of the unimodular transform reducing
    ``(m | n)`` span its integer kernel, so ``m @ x = -(n @ y)`` spans the
    intersection of the two column lattices.
    """
    d, _, w = _block_hnf([m, n], track=True)
    x = IntMatrix(row[d:] for row in w[:d])
    return canonical_form(m @ x)


def lcrm(ms: Sequence[IntMatrix]) -> IntMatrix:
    """Least common right multiple of two or more matrices, folded pairwise."""
    if len(ms) < 2:
        raise ValueError("lcrm needs at least two matrices")
    require_nonsingular(*ms)
    return reduce(lcrm_pair, ms)


def prime_factorize(a: IntMatrix) -> PrimeFactorization:
    """Split ``a`` into prime matrices through its Smith form.

    With ``a = U @ diag(d_1..d_D) @ V``, each prime ``p`` dividing ``d_k``
    contributes an elementary diagonal ``diag(1,..,p,..,1)`` (``p`` at
    position ``k``). The elementary diagonals are sorted by prime, then by
    position; ``U`` is folded into the first and ``V`` into the last.
    """
    require_nonsingular(a)
    d = a.dim
    det_a = abs(determinant(a))
    if det_a == 1:
        return PrimeFactorization((), unit=a)
    dec = snf(a)
    pieces = sorted(
        (p, k) for k, dk in enumerate(dec.invariant_factors) for p in factorize(dk)
    )
    elems = [
        IntMatrix.diag(*[p if i == k else 1 for i in range(d)]) for p, k in pieces
    ]
    elems[0] = dec.u @ elems[0]
    elems[-1] = elems[-1] @ dec.v
    cert = certainty(max(p for p, _ in pieces))
    return PrimeFactorization(tuple(elems), certainty=cert)
