"""Pairwise-coprime families of prime matrices.

A prime matrix of determinant ``±p`` is, up to a right unimodular factor, the
identity with one row ``m0`` replaced by ``(a_1, ..., a_{m0-1}, p, 0, ..., 0)``
where ``0 <= a_i < p``. Distinct such forms are pairwise coprime, and so are
prime matrices with distinct determinants, so families are built by choosing
primes and then Hermite forms.
"""
import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from .core import IntMatrix
from .errors import DomainError, NotPrimeError
from .primes import is_prime


@dataclass(frozen=True)
class PrimeHnfSpec:
    """Parameters of one prime Hermite form.

    ``pivot_row`` is 1-based, matching ordinary matrix notation; ``coeffs``
    are the ``pivot_row - 1`` entries left of the diagonal.
    """

    dim: int
    prime: int
    pivot_row: int
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.dim < 1:
            raise ValueError("dim must be positive")
        if not is_prime(self.prime):
            raise NotPrimeError(f"{self.prime} is not prime")
        if not 1 <= self.pivot_row <= self.dim:
            raise ValueError(f"pivot_row {self.pivot_row} outside [1, {self.dim}]")
        if len(self.coeffs) != self.pivot_row - 1:
            raise ValueError(f"expected {self.pivot_row - 1} coefficients, got {len(self.coeffs)}")
        if any(not 0 <= c < self.prime for c in self.coeffs):
            raise ValueError(f"coefficients must lie in [0, {self.prime})")

    def to_json(self):
        return {"dim": self.dim, "prime": self.prime, "pivot_row": self.pivot_row,
                "coeffs": list(self.coeffs)}


@dataclass(frozen=True)
class CommutativePairParams:
    alpha: int
    beta: int
    a: int
    b: int


def build_prime_hnf(spec: PrimeHnfSpec) -> IntMatrix:
    rows = [[int(i == j) for j in range(spec.dim)] for i in range(spec.dim)]
    m0 = spec.pivot_row - 1
    rows[m0][:m0] = spec.coeffs
    rows[m0][m0] = spec.prime
    return IntMatrix(rows)


def family_size(dim: int, prime: int) -> int:
    """Number of prime Hermite forms with determinant ``prime``: ``(p^D - 1)/(p - 1)``."""
    return (prime ** dim - 1) // (prime - 1)


def iter_prime_hnf_specs(dim: int, prime: int) -> Iterator[PrimeHnfSpec]:
    if not is_prime(prime):
        raise NotPrimeError(f"{prime} is not prime")
    for m0 in range(1, dim + 1):
        for coeffs in itertools.product(range(prime), repeat=m0 - 1):
            yield PrimeHnfSpec(dim, prime, m0, coeffs)


def enumerate_prime_hnfs(dim: int, prime: int) -> Iterator[IntMatrix]:
    """All prime Hermite forms of determinant ``prime``, ordered by (pivot row, coeffs)."""
    for spec in iter_prime_hnf_specs(dim, prime):
        yield build_prime_hnf(spec)


def build_coprime_family(
    dim: int, primes: Sequence[int], per_prime_count: Dict[int, int] = None
) -> List[IntMatrix]:
    """Concatenate, prime by prime, the first ``per_prime_count[p]`` forms.

    A prime missing from ``per_prime_count`` (or a ``None`` map) contributes
    all of its forms.
    """
    per_prime_count = per_prime_count or {}
    if len(set(primes)) != len(primes):
        raise ValueError("primes must be distinct")
    out = []
    for p in primes:
        if not is_prime(p):
            raise NotPrimeError(f"{p} is not prime")
        avail = family_size(dim, p)
        count = per_prime_count.get(p, avail)
        if count > avail:
            raise DomainError(
                f"only {avail} prime Hermite forms exist for dim={dim}, prime={p}; {count} requested"
            )
        if count < 0:
            raise ValueError("counts must be nonnegative")
        out.extend(itertools.islice(enumerate_prime_hnfs(dim, p), count))
    return out


def commutative_matrix(params: CommutativePairParams) -> IntMatrix:
    """``[[a, -alpha*b], [b, a - beta*b]]``; all of them commute for fixed (alpha, beta)."""
    if params.b == 0:
        raise ValueError("b must be nonzero; use a scalar matrix a*I instead")
    a, b = params.a, params.b
    return IntMatrix([[a, -params.alpha * b], [b, a - params.beta * b]])


def commutative_det(alpha: int, beta: int, a: int, b: int) -> int:
    return a * a - beta * a * b + alpha * b * b
