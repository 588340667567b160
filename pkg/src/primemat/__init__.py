"""Exact prime and coprime integer-matrix arithmetic."""
from .arith import (
    BezoutWitness,
    PrimeFactorization,
    are_coprime,
    bezout,
    gcld,
    is_prime_matrix,
    lcrm,
    prime_factorize,
)
from .core import (
    IntMatrix,
    determinant,
    is_left_divisor,
    is_unimodular,
    matmul,
    solve_exact,
)
from .errors import (
    DimensionMismatchError,
    DomainError,
    InconsistentRemaindersError,
    NotCoprimeError,
    NotPrimeError,
    ParseError,
    SingularMatrixError,
    UnitInputError,
)
from .families import (
    CommutativePairParams,
    PrimeHnfSpec,
    build_coprime_family,
    build_prime_hnf,
    commutative_matrix,
    enumerate_prime_hnfs,
)
from .gaussian import (
    GaussianInt,
    gaussian_coprime,
    gaussian_factorize,
    is_gaussian_prime,
    matrix_rep,
    primality_relation_report,
)
from .mdcrt import CrtInstance, CrtPlan, CrtSolution, crt_combine_pair, crt_solve, reduce
from .normal_forms import (
    HnfDecomposition,
    SnfDecomposition,
    canonical_form,
    hnf,
    is_prime_hnf_shape,
    snf,
)

__version__ = "0.1.0"
