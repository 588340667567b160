import os
import random
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from primemat.core import IntMatrix, determinant  # noqa: E402
from primemat.sampling import random_unimodular  # noqa: E402

EXAMPLE_4X4 = IntMatrix([[1, 0, 0, 0], [0, 1, 0, 0], [2, 0, 3, 0], [0, 0, 0, 1]])


@pytest.fixture
def rng():
    return random.Random(20240917)


@st.composite
def matrices(draw, min_dim=1, max_dim=5, lo=-9, hi=9, nonsingular=True):
    d = draw(st.integers(min_dim, max_dim))
    rows = draw(st.lists(st.lists(st.integers(lo, hi), min_size=d, max_size=d),
                         min_size=d, max_size=d))
    m = IntMatrix(rows)
    if nonsingular:
        from hypothesis import assume

        assume(determinant(m) != 0)
    return m


@st.composite
def unimodulars(draw, dim):
    seed = draw(st.integers(0, 2 ** 32))
    return random_unimodular(random.Random(seed), dim)
