"""Rational primality and factorization.

Below 2**64 primality is decided by Miller-Rabin with the first twelve prime
bases, which is a proof for every n < 3.3e24. Above 2**64 the same test is
run with :data:`PROBABLE_ROUNDS` fixed prime bases and the answer is labelled
``"probable"``.
"""
from typing import List

DETERMINISTIC_LIMIT = 2 ** 64
PROVEN = "proven"
PROBABLE = "probable"

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_EXTRA_BASES = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
                109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173)
PROBABLE_ROUNDS = len(_SMALL_PRIMES) + len(_EXTRA_BASES)
_TRIAL_LIMIT = 10_000


def _strong_probable_prime(n: int, a: int, d: int, s: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin; exact below 2**64, probabilistic (40 bases) above."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _SMALL_PRIMES if n < DETERMINISTIC_LIMIT else _SMALL_PRIMES + _EXTRA_BASES
    return all(_strong_probable_prime(n, a, d, s) for a in bases)


def certainty(n: int) -> str:
    """Label for the answer :func:`is_prime` gives on ``n``."""
    return PROVEN if abs(n) < DETERMINISTIC_LIMIT else PROBABLE


def factorize(n: int) -> List[int]:
    """Prime factors of ``|n|`` with multiplicity, nondecreasing."""
    n = abs(n)
    if n == 0:
        raise ValueError("0 has no prime factorization")
    out = []
    for p in _SMALL_PRIMES:
        while n % p == 0:
            out.append(p)
            n //= p
    p = 41
    while n > 1 and p * p <= n and p < _TRIAL_LIMIT:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 2
    if n > 1 and (p * p > n or is_prime(n)):
        out.append(n)
    elif n > 1:
        from sympy import factorint

        for p, e in sorted(factorint(n).items()):
            out.extend([int(p)] * e)
    return out
