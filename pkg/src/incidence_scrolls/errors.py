"""Exception hierarchy shared by every module.

Each class maps to one failure mode so callers (and the CLI exit-code
table) can react without parsing messages.
"""


class IncidenceError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(IncidenceError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class DimensionError(DomainError):
    """Total codimension of a product does not match what was asked for."""

    def __init__(self, expected: int, actual: int, what: str = "codimension"):
        self.expected = expected
        self.actual = actual
        super().__init__(f"{what} mismatch: expected {expected}, got {actual}")


class InvalidBaseError(IncidenceError, ValueError):
    """A base configuration fails the incidence (IS) dimension count."""


class JoinNotApplicable(DomainError):
    """The two chosen base spaces cannot be joined (n_i + n_j != n - 1)."""


class TransformNotApplicable(DomainError):
    """The elementary transform preconditions fail for this base."""


class FillingSpecError(DomainError):
    """Tableau content does not exactly fill the 2 x (n-1) rectangle."""


class UnsupportedError(IncidenceError):
    """The request is outside what the implemented theory covers."""


class ConsistencyFault(IncidenceError, AssertionError):
    """Two independent computations of the same integer disagree.

    ``lhs`` and ``rhs`` carry the disagreeing values and ``context`` names
    the parameter tuple, so a report can point at the offending input.
    """

    def __init__(self, name: str, lhs, rhs, context=None):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        self.context = context
        where = f" at {context}" if context is not None else ""
        super().__init__(f"{name}{where}: {lhs} != {rhs}")
