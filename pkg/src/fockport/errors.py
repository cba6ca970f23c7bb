"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input is outside the mathematical domain of an operation."""


class SizeCapError(DomainError):
    """Problem size exceeds a hard cap of a dense/expensive code path."""


class ImpossibleOutcomeError(DomainError):
    """A measurement outcome with zero probability was requested."""
