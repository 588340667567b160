import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import matrices
from oracles import fundamental_points, in_lattice
from primemat.arith import are_coprime, lcrm
from primemat.core import IntMatrix, determinant, mat_product, solve_exact
from primemat.errors import (
    InconsistentRemaindersError,
    NotCoprimeError,
    SingularMatrixError,
)
from primemat.families import CommutativePairParams, commutative_matrix, enumerate_prime_hnfs
from primemat.gaussian import GaussianInt, matrix_rep
from primemat.mdcrt import (
    CrtInstance,
    CrtPlan,
    crt_combine_pair,
    crt_solve,
    reduce,
)
from primemat.normal_forms import canonical_form
from primemat.sampling import random_coprime_family

vectors = st.lists(st.integers(-200, 200), min_size=1, max_size=5)


def test_reduce_examples():
    assert reduce((17, -4), IntMatrix.identity(2)) == (0, 0)
    assert reduce((3, 5), IntMatrix.diag(2, 2)) == (1, 1)
    assert reduce((2, 0), IntMatrix([[1, -1], [1, 1]])) == (0, 0)
    with pytest.raises(SingularMatrixError):
        reduce((1, 1), IntMatrix([[1, 1], [1, 1]]))


@settings(max_examples=300)
@given(st.data())
def test_reduce_properties(data):
    m = data.draw(matrices(max_dim=4, lo=-6, hi=6))
    v = tuple(data.draw(st.lists(st.integers(-200, 200), min_size=m.dim, max_size=m.dim)))
    r = reduce(v, m)
    assert reduce(r, m) == r
    assert in_lattice(m.tolist(), [a - b for a, b in zip(v, r)])
    t = solve_exact(m, r)
    assert all(0 <= x < 1 for x in t)


def test_fundamental_region_cardinality():
    rng = random.Random(1)
    for _ in range(40):
        while True:
            m = IntMatrix([[rng.randint(-4, 4) for _ in range(2)] for _ in range(2)])
            if 1 <= abs(determinant(m)) <= 12:
                break
        seen = {reduce((x, y), m) for x in range(-15, 16) for y in range(-15, 16)}
        assert len(seen) == abs(determinant(m))
        assert seen == set(fundamental_points(m.tolist()))


def test_combine_pair_examples():
    l12, n = crt_combine_pair(IntMatrix.diag(2, 1), (0, 0), IntMatrix.diag(1, 2), (0, 0))
    assert n == (0, 0)
    l12, n = crt_combine_pair(IntMatrix.diag(2, 1), (1, 0), IntMatrix.diag(1, 2), (0, 1))
    assert l12 == IntMatrix.diag(2, 2) and n == (1, 1)
    with pytest.raises(NotCoprimeError):
        crt_combine_pair(IntMatrix.diag(2, 2), (0, 0), IntMatrix.diag(2, 1), (0, 0))


def test_combine_pair_gaussian_round_trip():
    m1, m2 = matrix_rep(GaussianInt(1, 1)), matrix_rep(GaussianInt(2, 1))
    rng = random.Random(2)
    for _ in range(200):
        v = (rng.randint(-100, 100), rng.randint(-100, 100))
        l12, n = crt_combine_pair(m1, reduce(v, m1), m2, reduce(v, m2))
        assert n == reduce(v, l12)
        assert reduce(n, m1) == reduce(v, m1) and reduce(n, m2) == reduce(v, m2)


def test_crt_solve_zero_remainders():
    moduli = list(enumerate_prime_hnfs(2, 3))[:2] + [IntMatrix.diag(5, 1)]
    sol = crt_solve(CrtInstance(moduli, [(0, 0)] * 3))
    assert sol.n == (0, 0)


def test_crt_exhaustive_over_cosets():
    moduli = [IntMatrix([[1, -1], [1, 1]]), IntMatrix([[2, -1], [1, 2]]), IntMatrix([[1, 0], [2, 3]])]
    plan = CrtPlan(moduli)
    assert abs(determinant(plan.lcrm_modulus)) == 2 * 5 * 3
    for v in fundamental_points(plan.lcrm_modulus.tolist()):
        rems = [reduce(v, m) for m in moduli]
        assert plan.solve(rems).n == v
        assert crt_solve(CrtInstance(moduli, rems)).n == v


def test_same_prime_triple_has_smaller_range():
    # pairwise coprime, but the three determinant-2 forms only cut out 2Z^2
    fam = list(enumerate_prime_hnfs(2, 2))
    assert all(are_coprime(a, b) for a, b in itertools.combinations(fam, 2))
    assert lcrm(fam) == IntMatrix.diag(2, 2)
    moduli = fam + [IntMatrix.diag(3, 1)]
    plan = CrtPlan(moduli)
    assert abs(determinant(plan.lcrm_modulus)) == 12
    for v in fundamental_points(plan.lcrm_modulus.tolist()):
        assert plan.solve([reduce(v, m) for m in moduli]).n == v
    # 2*2*2*3 remainder tuples, only 12 consistent
    ok = 0
    for combo in itertools.product(*[fundamental_points(m.tolist()) for m in moduli]):
        try:
            plan.solve(list(combo))
            ok += 1
        except InconsistentRemaindersError:
            pass
    assert ok == 12


def test_crt_random_families_round_trip():
    rng = random.Random(3)
    for _ in range(15):
        d = rng.choice((2, 3))
        fam = random_coprime_family(rng, d, rng.randint(2, 4))
        plan = CrtPlan(fam)
        assert abs(determinant(plan.lcrm_modulus)) == abs(determinant(mat_product(fam)))
        for _ in range(50):
            v = reduce(tuple(rng.randint(-10 ** 4, 10 ** 4) for _ in range(d)), plan.lcrm_modulus)
            rems = [reduce(v, m) for m in fam]
            sol = plan.solve(rems)
            assert sol.n == v
        perm = fam[:]
        rng.shuffle(perm)
        assert CrtPlan(perm).solve([reduce(v, m) for m in perm]).n == v
        assert CrtPlan(perm).lcrm_modulus == plan.lcrm_modulus


def test_crt_commuting_moduli_lcrm_is_product():
    ms = [commutative_matrix(CommutativePairParams(1, 0, a, b)) for a, b in ((1, 1), (2, 1), (3, 2))]
    sol = crt_solve(CrtInstance(ms, [(0, 0)] * 3))
    assert sol.lcrm_modulus == canonical_form(mat_product(ms))


def test_crt_solve_errors():
    with pytest.raises(NotCoprimeError):
        crt_solve(CrtInstance([IntMatrix.diag(2, 1), IntMatrix.diag(2, 3)], [(0, 0), (0, 0)]))
    with pytest.raises(InconsistentRemaindersError):
        crt_solve(CrtInstance([IntMatrix.diag(2, 1), IntMatrix.diag(1, 3)], [(2, 0), (0, 0)]))
    with pytest.raises(ValueError):
        CrtInstance([IntMatrix.diag(2, 1)], [])


def test_reduce_is_floor_of_rational_coordinates():
    m = IntMatrix([[3, 1], [-2, 5]])
    v = (-7, 11)
    t = solve_exact(m, v)
    k = [x.numerator // x.denominator for x in t]
    expected = tuple(a - sum(r * kk for r, kk in zip(row, k)) for a, row in zip(v, m.rows))
    assert reduce(v, m) == expected
    assert all(isinstance(x, Fraction) for x in t)


@pytest.mark.parametrize("dim, p, k", [(2, 2, 3), (2, 3, 3), (2, 5, 4), (3, 2, 4), (3, 3, 5)])
def test_intersection_of_many_same_prime_forms_oracle(dim, p, k):
    # every det-p prime lattice contains pZ^D, so the intersection is pinned down
    # by which points of [0, p)^D survive all memberships
    forms = list(enumerate_prime_hnfs(dim, p))[:k]
    survivors = [v for v in itertools.product(range(p), repeat=dim)
                 if all(in_lattice(f.tolist(), v) for f in forms)]
    index = p ** dim // len(survivors)
    assert abs(determinant(lcrm(forms))) == index
    assert index < p ** k
