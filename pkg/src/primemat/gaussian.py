"""Gaussian integers and their 2x2 integer-matrix images.

``a + jb`` maps to ``[[a, -b], [b, a]]``. The map is a ring homomorphism,
the norm is the determinant of the image, and units map to unimodular
matrices. Gaussian primality and matrix primality agree off the axes; on the
axes a Gaussian prime ``q`` (``q = 3 mod 4``) maps to ``diag(q, q)``, which
is not a prime matrix.
"""
import re
from dataclasses import dataclass
from typing import List, NamedTuple, Tuple

from .arith import are_coprime, is_prime_matrix
from .core import IntMatrix
from .errors import DomainError, ParseError, UnitInputError
from .primes import factorize, is_prime


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int = 0

    def __add__(self, other):
        other = _lift(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        other = _lift(other)
        return GaussianInt(
            self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re
        )

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = GaussianInt(1)
        for _ in range(e):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.re or self.im)

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __divmod__(self, other):
        return gaussian_divmod(self, other)

    def __floordiv__(self, other):
        return gaussian_divmod(self, other)[0]

    def __mod__(self, other):
        return gaussian_divmod(self, other)[1]

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = {1: "j", -1: "-j"}.get(self.im, f"{self.im}j")
        if self.re == 0:
            return im
        return f"{self.re}{'' if im.startswith('-') else '+'}{im}"

    def to_json(self):
        return {"re": self.re, "im": self.im}


UNITS = (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1))


def _lift(x) -> GaussianInt:
    if isinstance(x, GaussianInt):
        return x
    if isinstance(x, int):
        return GaussianInt(x, 0)
    raise TypeError(f"cannot treat {x!r} as a Gaussian integer")


def _round_div(num: int, den: int) -> int:
    # nearest integer to num/den, den > 0, halves rounded up
    return (2 * num + den) // (2 * den)


def gaussian_divmod(z: GaussianInt, w: GaussianInt) -> Tuple[GaussianInt, GaussianInt]:
    """Division with nearest-rounded quotient; the remainder has ``N(r) <= N(w)/2``."""
    w = _lift(w)
    n = w.norm()
    if n == 0:
        raise ZeroDivisionError("Gaussian division by zero")
    t = z * w.conjugate()
    q = GaussianInt(_round_div(t.re, n), _round_div(t.im, n))
    return q, z - q * w


def normalize(z: GaussianInt) -> Tuple[GaussianInt, GaussianInt]:
    """``(u, w)`` with ``z = u * w``, ``u`` a unit and ``w`` in the first quadrant
    (``re > 0, im >= 0``). Zero maps to ``(1, 0)``."""
    if not z:
        return GaussianInt(1), z
    for u in UNITS:
        w = z * u.conjugate()  # u^-1 == conj(u) for units
        if w.re > 0 and w.im >= 0:
            return u, w
    raise AssertionError("unreachable")


def gaussian_gcd(z1: GaussianInt, z2: GaussianInt) -> GaussianInt:
    """Euclid's algorithm; result normalized to the first quadrant."""
    a, b = _lift(z1), _lift(z2)
    while b:
        a, b = b, gaussian_divmod(a, b)[1]
    return normalize(a)[1]


def matrix_rep(z: GaussianInt) -> IntMatrix:
    return IntMatrix([[z.re, -z.im], [z.im, z.re]])


def from_matrix(m: IntMatrix) -> GaussianInt:
    """Inverse of :func:`matrix_rep`; rejects matrices not of the form ``[[a,-b],[b,a]]``."""
    if m.shape != (2, 2):
        raise DomainError("matrix is not the image of a Gaussian integer")
    (a, nb), (b, a2) = m.rows
    if a != a2 or nb != -b:
        raise DomainError("matrix is not the image of a Gaussian integer")
    return GaussianInt(a, b)


def norm(z: GaussianInt) -> int:
    return z.norm()


def is_unit(z: GaussianInt) -> bool:
    return z.norm() == 1


def _require_proper(z: GaussianInt) -> None:
    if not z:
        raise UnitInputError("zero is neither prime nor composite")
    if is_unit(z):
        raise UnitInputError(f"{z} is a unit")


def is_gaussian_prime(z: GaussianInt) -> bool:
    _require_proper(z)
    if z.re and z.im:
        return is_prime(z.norm())
    q = abs(z.re or z.im)
    return q % 4 == 3 and is_prime(q)


def gaussian_coprime(z1: GaussianInt, z2: GaussianInt, check: bool = True) -> bool:
    """Coprimality by Euclid's gcd, cross-checked against left coprimality of
    the matrix images (the two always agree; ``check=False`` skips the matrix route)."""
    if not z1 or not z2:
        raise DomainError("coprimality is not defined for zero")
    by_euclid = is_unit(gaussian_gcd(z1, z2))
    if check:
        by_matrix = are_coprime(matrix_rep(z1), matrix_rep(z2))
        if by_matrix != by_euclid:
            raise AssertionError(f"coprimality disagreement for {z1}, {z2}")
    return by_euclid


class PrimalityReport(NamedTuple):
    gaussian_prime: bool
    matrix_prime: bool

    def to_json(self):
        return {"gaussian_prime": self.gaussian_prime, "matrix_prime": self.matrix_prime}


def primality_relation_report(z: GaussianInt) -> PrimalityReport:
    _require_proper(z)
    report = PrimalityReport(is_gaussian_prime(z), is_prime_matrix(matrix_rep(z)))
    if report.matrix_prime and not report.gaussian_prime:
        raise AssertionError(f"matrix-prime but not Gaussian-prime: {z}")
    return report


def _sqrt_minus_one(p: int) -> int:
    # p = 1 mod 4: c^((p-1)/4) squares to -1 for any quadratic non-residue c
    c = 2
    while pow(c, (p - 1) // 2, p) != p - 1:
        c += 1
    return pow(c, (p - 1) // 4, p)


def _prime_above(p: int) -> GaussianInt:
    if p == 2:
        return GaussianInt(1, 1)
    if p % 4 == 3:
        return GaussianInt(p, 0)
    return gaussian_gcd(GaussianInt(p), GaussianInt(_sqrt_minus_one(p), 1))


def gaussian_factorize(z: GaussianInt) -> List[GaussianInt]:
    """Gaussian primes whose product is ``z``.

    Factors are first-quadrant representatives ordered by norm then by
    ``(re, im)``; the leftover unit is multiplied into the first factor.
    """
    _require_proper(z)
    rest = z
    out = []
    for p in sorted(set(factorize(z.norm()))):
        pi = _prime_above(p)
        candidates = [pi] if p % 4 != 1 else [pi, normalize(pi.conjugate())[1]]
        for c in candidates:
            while True:
                q, r = gaussian_divmod(rest, c)
                if r:
                    break
                out.append(c)
                rest = q
    if not is_unit(rest):
        raise AssertionError(f"factorization left a non-unit cofactor {rest}")
    out.sort(key=lambda w: (w.norm(), w.re, w.im))
    out[0] = rest * out[0]
    return out


_GAUSS_RE = re.compile(
    r"""^\s*(?:
        (?P<re>[+-]?\d+)?\s*(?:(?P<sign>[+-])\s*(?P<im>\d*)\s*[ji])?   # a, a+bj, a-j
      | (?P<only_im>[+-]?\d*)\s*[ji]                                  # bj, -j
    )\s*$""",
    re.VERBOSE,
)


def parse_gaussian(text: str) -> GaussianInt:
    """Parse ``"4+5j"``, ``"4-5j"``, ``"3"``, ``"-j"``, ``"2j"`` (``i`` also accepted)."""
    m = _GAUSS_RE.match(text)
    if not m or not text.strip():
        raise ParseError(f"cannot parse Gaussian integer {text!r}")
    if m.group("only_im") is not None:
        s = m.group("only_im")
        im = int(s + "1") if s in ("", "+", "-") else int(s)
        return GaussianInt(0, im)
    re_part = m.group("re")
    if re_part is None and m.group("sign") is None:
        raise ParseError(f"cannot parse Gaussian integer {text!r}")
    re_val = int(re_part) if re_part is not None else 0
    im_val = 0
    if m.group("sign"):
        im_val = int(m.group("im") or "1")
        if m.group("sign") == "-":
            im_val = -im_val
    return GaussianInt(re_val, im_val)
