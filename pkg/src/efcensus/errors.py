"""Exception hierarchy shared by all efcensus modules.

Exit-code mapping used by the CLI: DomainError -> 1, CapacityError -> 2.
"""


class EfcensusError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(EfcensusError):
    """An argument is outside the mathematical domain of the operation."""


class CapacityError(EfcensusError):
    """The request exceeds a configured size/capacity limit."""
