"""
Exception hierarchy shared by every core module.
"""

from typing import List, Optional


class TopologyError(Exception):
    """Base class for all errors raised by the library."""


class ComplexConstructionError(TopologyError, ValueError):
    """Raised by new_complex when the cell arrays are inconsistent."""

    def __init__(self, message: str, dim: Optional[int] = None, index: Optional[int] = None,
                 slot: Optional[int] = None):
        super().__init__(message)
        self.dim = dim
        self.index = index
        self.slot = slot


class InvalidComplexError(TopologyError, ValueError):
    """An operation that needs a valid complex received one with violations."""

    def __init__(self, message: str, diagnostics: Optional[List[str]] = None):
        self.diagnostics = list(diagnostics or [])
        if self.diagnostics:
            message = f"{message}: " + "; ".join(self.diagnostics)
        super().__init__(message)


class QuotientInconsistencyError(TopologyError):
    """Face propagation tried to identify cells of different dimensions."""


class NonOrderPreservingGluingError(TopologyError, ValueError):
    """A gluing whose vertex correspondence does not preserve vertex order."""


class PreconditionError(TopologyError, ValueError):
    """Dimension or range precondition of an operation is not met."""


class DisconnectedComplexError(TopologyError):
    """Fundamental group requested for a complex with several components."""


class ShapeMismatchError(TopologyError, ValueError):
    """Matrix shapes do not fit together."""


class ForeignGeneratorError(TopologyError, ValueError):
    """A word uses generators outside the two-generator trefoil alphabet."""


class KnotConfigError(TopologyError, ValueError):
    """Invalid curve configuration (variant, samples or parameter)."""


class SerializationError(TopologyError, ValueError):
    """A JSON document could not be read as a complex or presentation."""


class PresentationError(TopologyError, ValueError):
    """A word or presentation references generators that do not exist."""
