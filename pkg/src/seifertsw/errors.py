"""Exception hierarchy shared by all modules.

Every domain failure derives from DomainError so the CLI can map the whole
family to a single exit code while still reporting the specific condition.
"""


class DomainError(Exception):
    """Base class for all invariant and precondition failures."""


class SingularMatrix(DomainError):
    """Exact linear solve hit a zero determinant."""


class NonCoprimeModuli(DomainError):
    """Chinese-remainder input moduli share a factor."""


class NonCoprime(DomainError):
    """Brieskorn multiplicities are not pairwise coprime."""


class BaseMismatch(DomainError):
    """Two bundles over different orbifold bases were combined."""


class ZeroDegree(DomainError):
    """Operation requires a fibration of non-zero degree."""


class InvalidPair(DomainError):
    """Continued-fraction input (p, q) violates 0 < q < p, gcd = 1."""


class JOutOfRange(DomainError):
    """Sheaf index j outside 0 <= j < p."""


class NonIsolatedCritical(DomainError):
    """Some irreducible critical component is positive-dimensional.

    Carries the full component list so callers can inspect what was found
    instead of a homology table.
    """

    def __init__(self, message, components):
        super().__init__(message)
        self.components = components


class WrongOrientation(DomainError):
    """Fibration has positive degree; invert it to build Floer tables."""


class DegenerateReducible(DomainError):
    """The reducible locus fails the non-degeneracy criterion."""


class OppositeSign(DomainError):
    """Requested a flow between components of opposite sign."""


class FromReducible(DomainError):
    """Requested a flow out of the reducible locus; those are empty."""


class ParseError(ValueError):
    """Text notation failed to parse; message carries the column."""

    def __init__(self, message, column):
        super().__init__(f"{message} (column {column})")
        self.column = column
