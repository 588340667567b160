"""Seeded random generators for unimodular, prime and coprime matrices."""
import random
from typing import List, Optional, Sequence

from .arith import are_coprime
from .core import IntMatrix, determinant
from .families import PrimeHnfSpec, build_prime_hnf


def random_unimodular(rng: random.Random, dim: int, steps: int = None, bound: int = 2) -> IntMatrix:
    """Product of random elementary column operations, swaps and sign flips."""
    m = [[int(i == j) for j in range(dim)] for i in range(dim)]
    if dim == 1:
        return IntMatrix([[rng.choice((1, -1))]])
    steps = 2 * dim if steps is None else steps
    for _ in range(steps):
        i, j = rng.sample(range(dim), 2)
        kind = rng.random()
        if kind < 0.7:
            q = rng.choice([x for x in range(-bound, bound + 1) if x])
            for row in m:
                row[j] += q * row[i]
        elif kind < 0.85:
            for row in m:
                row[i], row[j] = row[j], row[i]
        else:
            for row in m:
                row[i] = -row[i]
    return IntMatrix(m)


def random_prime_hnf(rng: random.Random, dim: int, prime: int) -> IntMatrix:
    m0 = rng.randint(1, dim)
    coeffs = tuple(rng.randrange(prime) for _ in range(m0 - 1))
    return build_prime_hnf(PrimeHnfSpec(dim, prime, m0, coeffs))


def random_prime_matrix(rng: random.Random, dim: int, primes: Sequence[int] = (2, 3, 5, 7, 11, 13),
                        scramble: bool = True) -> IntMatrix:
    """``U @ H @ V`` for a random prime Hermite form ``H`` and unimodular ``U``, ``V``."""
    h = random_prime_hnf(rng, dim, rng.choice(primes))
    if not scramble:
        return h
    return random_unimodular(rng, dim) @ h @ random_unimodular(rng, dim)


def random_coprime_family(rng: random.Random, dim: int, size: int,
                          primes: Sequence[int] = (2, 3, 5, 7, 11, 13),
                          distinct_dets: bool = True,
                          max_tries: int = 1000) -> Optional[List[IntMatrix]]:
    """Pairwise-coprime prime matrices, scrambled by unimodular factors.

    With ``distinct_dets`` every member gets its own prime determinant;
    otherwise primes may repeat and members only need distinct Hermite forms.
    Returns None if no family was found within ``max_tries`` draws.
    """
    out: List[IntMatrix] = []
    used = set()
    pool = list(primes)
    for _ in range(max_tries):
        if len(out) == size:
            return out
        p = rng.choice(pool)
        if distinct_dets and p in used:
            continue
        m = random_unimodular(rng, dim) @ random_prime_hnf(rng, dim, p) @ random_unimodular(rng, dim)
        if all(are_coprime(m, o) for o in out):
            out.append(m)
            used.add(p)
    return out if len(out) == size else None


def random_nonsingular(rng: random.Random, dim: int, lo: int = -9, hi: int = 9) -> IntMatrix:
    while True:
        m = IntMatrix([[rng.randint(lo, hi) for _ in range(dim)] for _ in range(dim)])
        if determinant(m) != 0:
            return m
