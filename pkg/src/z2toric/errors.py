"""Exception types shared across the package."""


class CapacityError(Exception):
    """An enumeration request exceeds the configured size bound."""


class DimensionMismatchError(ValueError):
    """Operands live in spaces of different ranks."""


class ConsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""


class UnsupportedShapeError(ValueError):
    """A poset does not have the shape an operation requires."""
