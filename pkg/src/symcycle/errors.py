"""Exception hierarchy shared by all modules."""


class SymCycleError(Exception):
    """Base class for errors raised by this package."""


class DomainError(SymCycleError, ValueError):
    """An argument lies outside the domain of the operation."""


class DimensionError(DomainError):
    """Two sign vectors of different lengths were combined."""


class InvalidDecompositionError(DomainError):
    """A coordinate vector does not describe a vertex of the hypercube."""


class ResourceLimitError(SymCycleError):
    """An exhaustive enumeration was requested above its configured cap."""
