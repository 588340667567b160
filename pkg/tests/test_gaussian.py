import itertools

import pytest
from hypothesis import given, settings, strategies as st

from oracles import gaussian_is_prime_bruteforce
from primemat.arith import are_coprime, is_prime_matrix
from primemat.core import IntMatrix, determinant, is_unimodular
from primemat.errors import DomainError, ParseError, UnitInputError
from primemat.gaussian import (
    GaussianInt as G,
    from_matrix,
    gaussian_coprime,
    gaussian_divmod,
    gaussian_factorize,
    gaussian_gcd,
    is_gaussian_prime,
    is_unit,
    matrix_rep,
    norm,
    normalize,
    parse_gaussian,
    primality_relation_report,
)
from primemat.normal_forms import canonical_form, snf

gints = st.builds(G, st.integers(-60, 60), st.integers(-60, 60))
nonzero_gints = gints.filter(bool)


def test_matrix_rep_examples():
    assert matrix_rep(G(1)) == IntMatrix.identity(2)
    assert matrix_rep(G(4, 5)) == IntMatrix([[4, -5], [5, 4]])
    assert matrix_rep(G(3)) == IntMatrix.diag(3, 3)
    assert from_matrix(IntMatrix([[4, -5], [5, 4]])) == G(4, 5)
    with pytest.raises(DomainError):
        from_matrix(IntMatrix([[4, 5], [5, 4]]))


def test_norm_and_units():
    assert norm(G(1, 1)) == 2 and norm(G(4, 5)) == 41 and norm(G(3)) == 9
    assert is_unit(G(1)) and is_unit(G(0, -1))
    assert not is_unit(G(1, 1))
    for u in (G(1), G(-1), G(0, 1), G(0, -1)):
        assert is_unimodular(matrix_rep(u))


@settings(max_examples=300)
@given(gints, gints)
def test_matrix_rep_is_ring_homomorphism(z1, z2):
    assert matrix_rep(z1 * z2) == matrix_rep(z1) @ matrix_rep(z2)
    assert matrix_rep(z1 + z2) == matrix_rep(z1) + matrix_rep(z2)
    assert norm(z1) == determinant(matrix_rep(z1))
    assert is_unit(z1) == (abs(determinant(matrix_rep(z1))) == 1)


@settings(max_examples=300)
@given(gints, nonzero_gints)
def test_divmod_remainder_is_small(z, w):
    q, r = gaussian_divmod(z, w)
    assert q * w + r == z
    assert 2 * norm(r) <= norm(w)


def test_is_gaussian_prime_examples():
    assert is_gaussian_prime(G(3))
    assert is_gaussian_prime(G(4, 5))
    assert not is_gaussian_prime(G(2))
    assert G(0, -1) * G(1, 1) * G(1, 1) == G(2)
    assert is_gaussian_prime(G(0, -7)) and not is_gaussian_prime(G(0, 5))
    for bad in (G(0), G(1), G(0, -1)):
        with pytest.raises(UnitInputError):
            is_gaussian_prime(bad)


def test_is_gaussian_prime_matches_bruteforce():
    for a, b in itertools.product(range(-15, 16), repeat=2):
        if a * a + b * b > 1:
            assert is_gaussian_prime(G(a, b)) == gaussian_is_prime_bruteforce(a, b), (a, b)


def test_gcd_normalized():
    assert gaussian_gcd(G(3), G(3, 3)) == G(3)
    assert gaussian_gcd(G(4, 5), G(4, -5)) == G(1)
    assert gaussian_gcd(G(0, 2), G(2, 2)) == G(2)
    assert gaussian_gcd(G(0, 2), G(3, 1)) == G(1, 1)
    u, w = normalize(G(-3, -1))
    assert u * w == G(-3, -1) and w.re > 0 and w.im >= 0


def test_gaussian_coprime_examples():
    for z in (G(3), G(2, 1), G(4, 5), G(7, 2), G(5)):
        assert gaussian_coprime(G(1, 1), z)
    assert gaussian_coprime(G(4, 5), G(4, -5))
    assert canonical_form(matrix_rep(G(4, 5))) != canonical_form(matrix_rep(G(4, -5)))
    assert not gaussian_coprime(G(3), G(3, 3))
    with pytest.raises(DomainError):
        gaussian_coprime(G(0), G(3))


def test_primality_relation_report_examples():
    assert primality_relation_report(G(4, 5)) == (True, True)
    r = primality_relation_report(G(3))
    assert r.gaussian_prime and not r.matrix_prime
    assert primality_relation_report(G(2)) == (False, False)
    assert r.to_json() == {"gaussian_prime": True, "matrix_prime": False}


def test_off_axis_primality_notions_coincide():
    for a, b in itertools.product(range(-20, 21), repeat=2):
        if a and b:
            assert is_gaussian_prime(G(a, b)) == is_prime_matrix(matrix_rep(G(a, b)))


def test_axis_gaussian_primes_have_scalar_smith_form():
    for q in (3, 7, 11, 19):
        assert snf(matrix_rep(G(q))).lam == IntMatrix.diag(q, q)
        assert snf(matrix_rep(G(0, q))).lam == IntMatrix.diag(q, q)


def _product(zs):
    out = G(1)
    for z in zs:
        out = out * z
    return out


def test_gaussian_factorize_examples():
    assert gaussian_factorize(G(1, 1)) == [G(1, 1)]
    fs = gaussian_factorize(G(2))
    assert _product(fs) == G(2) and len(fs) == 2
    assert all(is_gaussian_prime(f) for f in fs)
    assert gaussian_factorize(G(4, 5)) == [G(4, 5)]
    with pytest.raises(UnitInputError):
        gaussian_factorize(G(0, 1))


@settings(max_examples=300)
@given(gints.filter(lambda z: norm(z) > 1))
def test_gaussian_factorize_reassembles(z):
    fs = gaussian_factorize(z)
    assert _product(fs) == z
    assert all(is_gaussian_prime(f) for f in fs)
    n = 1
    for f in fs:
        n *= norm(f)
    assert n == norm(z)
    # all but the first factor are first-quadrant representatives
    assert all(f.re > 0 and f.im >= 0 for f in fs[1:])


def test_coprimality_equivalence_small_box():
    zs = [G(a, b) for a in range(-6, 7) for b in range(-6, 7) if a or b]
    for z1, z2 in itertools.combinations(zs, 2):
        assert is_unit(gaussian_gcd(z1, z2)) == are_coprime(matrix_rep(z1), matrix_rep(z2))


@pytest.mark.parametrize("text, z", [
    ("4+5j", G(4, 5)), ("4-5j", G(4, -5)), ("3", G(3)), ("-j", G(0, -1)),
    ("2j", G(0, 2)), (" 1 + i ", G(1, 1)), ("-3-j", G(-3, -1)), ("+7", G(7)),
])
def test_parse_gaussian(text, z):
    assert parse_gaussian(text) == z
    assert parse_gaussian(str(z)) == z


@pytest.mark.parametrize("text", ["", "x", "+", "4+", "4+5", "j4", "1.5"])
def test_parse_gaussian_rejects(text):
    with pytest.raises(ParseError):
        parse_gaussian(text)
