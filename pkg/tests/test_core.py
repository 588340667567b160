from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import EXAMPLE_4X4, matrices
from oracles import cofactor_det, naive_matmul
from primemat.core import (
    IntMatrix,
    adjugate,
    determinant,
    is_left_divisor,
    is_unimodular,
    matmul,
    solve_exact,
)
from primemat.errors import DimensionMismatchError, SingularMatrixError

I2 = IntMatrix.identity(2)


def test_matmul_examples():
    m = IntMatrix([[3, 1], [4, 1]])
    assert matmul(I2, m) == m
    assert matmul(IntMatrix.diag(2, 1), IntMatrix.diag(1, 2)) == IntMatrix.diag(2, 2)
    r = IntMatrix([[1, -1], [1, 1]])
    assert matmul(r, r) == IntMatrix([[0, -2], [2, 0]])


def test_matmul_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        matmul(I2, IntMatrix.identity(3))


def test_determinant_examples():
    assert determinant(IntMatrix.identity(4)) == 1
    assert determinant(EXAMPLE_4X4) == 3
    assert determinant(IntMatrix([[4, -5], [5, 4]])) == 41
    assert determinant(IntMatrix([[0, 1], [1, 0]])) == -1
    assert determinant(IntMatrix([[1, 2], [2, 4]])) == 0
    assert determinant(IntMatrix([[7]])) == 7


def test_determinant_needs_row_swaps():
    m = IntMatrix([[0, 0, 1], [0, 2, 0], [3, 0, 0]])
    assert determinant(m) == cofactor_det(m.tolist()) == -6


def test_big_entries_do_not_overflow():
    big = 10 ** 40
    m = IntMatrix([[big, 1], [1, big]])
    assert determinant(m) == big * big - 1
    assert determinant(m @ m @ m) == (big * big - 1) ** 3


@settings(max_examples=300)
@given(matrices(nonsingular=False))
def test_determinant_matches_cofactor(m):
    assert determinant(m) == cofactor_det(m.tolist())


@settings(max_examples=100)
@given(st.data())
def test_matmul_associative_and_identity(data):
    d = data.draw(st.integers(1, 4))
    a, b, c = (data.draw(matrices(d, d, nonsingular=False)) for _ in range(3))
    assert (a @ b) @ c == a @ (b @ c)
    assert (a @ b).tolist() == naive_matmul(a.tolist(), b.tolist())
    ident = IntMatrix.identity(d)
    assert ident @ a == a == a @ ident


def test_is_unimodular():
    assert is_unimodular(IntMatrix.identity(3))
    assert is_unimodular(IntMatrix([[1, 0], [5, 1]]))
    assert not is_unimodular(IntMatrix.diag(3, 3))
    assert is_unimodular(IntMatrix([[2, 1], [1, 1]]))


def test_solve_exact_examples():
    assert solve_exact(I2, (4, -7)) == (4, -7)
    assert solve_exact(IntMatrix.diag(2, 2), (1, 3)) == (Fraction(1, 2), Fraction(3, 2))
    x = solve_exact(IntMatrix([[1, -1], [1, 1]]), (2, 0))
    assert x == (1, -1)


def test_solve_exact_singular():
    with pytest.raises(SingularMatrixError):
        solve_exact(IntMatrix([[1, 2], [2, 4]]), (1, 1))


@settings(max_examples=150)
@given(st.data())
def test_solve_exact_round_trip(data):
    a = data.draw(matrices())
    v = data.draw(st.lists(st.integers(-50, 50), min_size=a.dim, max_size=a.dim))
    x = solve_exact(a, v)
    assert tuple(sum(r * xi for r, xi in zip(row, x)) for row in a.rows) == tuple(v)


def test_is_left_divisor_examples():
    m = IntMatrix([[3, 1], [4, 1]])
    assert is_left_divisor(I2, m)
    assert is_left_divisor(IntMatrix.diag(2, 1), IntMatrix.diag(2, 2))
    assert not is_left_divisor(IntMatrix.diag(2, 1), IntMatrix.diag(1, 2))
    with pytest.raises(SingularMatrixError):
        is_left_divisor(IntMatrix([[1, 1], [1, 1]]), m)


@settings(max_examples=100)
@given(st.data())
def test_left_divisor_of_right_multiple(data):
    a = data.draw(matrices(max_dim=4, lo=-5, hi=5))
    p = data.draw(matrices(a.dim, a.dim, lo=-5, hi=5))
    assert is_left_divisor(a, a @ p)


@settings(max_examples=100)
@given(matrices(max_dim=4))
def test_adjugate(a):
    d = determinant(a)
    assert a @ adjugate(a) == IntMatrix.identity(a.dim) * d


def test_matrix_value_semantics():
    a = IntMatrix([[1, 2], [3, 4]])
    assert a == IntMatrix(((1, 2), (3, 4)))
    assert hash(a) == hash(IntMatrix([[1, 2], [3, 4]]))
    assert a.T == IntMatrix([[1, 3], [2, 4]])
    assert -a + a == IntMatrix.zeros(2)
    assert 2 * a == a + a
    assert a @ (1, 1) == (3, 7)
    with pytest.raises(DimensionMismatchError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        IntMatrix([[1.5]])
