"""Exception hierarchy.

Every failure that follows from the mathematics of the inputs (a singular
matrix, a non-coprime pair, a composite where a prime was required) derives
from :class:`DomainError`. Malformed text or JSON raises :class:`ParseError`.
"""


class DomainError(ValueError):
    pass


class DimensionMismatchError(DomainError):
    pass


class SingularMatrixError(DomainError):
    pass


class NotCoprimeError(DomainError):
    pass


class NotPrimeError(DomainError):
    pass


class UnitInputError(DomainError):
    """Raised when a unit (unimodular matrix, Gaussian unit) or zero is given
    to an operation that needs a proper non-unit."""


class InconsistentRemaindersError(DomainError):
    pass


class ParseError(ValueError):
    pass
