"""
Exception hierarchy shared by every DiskRep package.

Numerical failures carry the quantities needed to diagnose them (achieved
error estimates, violated lattice cells, tail bounds) so callers can report
them without re-running the computation.
"""

from typing import Optional


class DiskRepError(Exception):
    """Base class for all toolkit errors"""


class DomainError(DiskRepError, ValueError):
    """A point or parameter lies outside the domain of an operation"""


class ConstraintError(DiskRepError, ValueError):
    """Kernel, space or construction parameters violate their admissibility constraints"""


class QuadratureError(DiskRepError):
    """A quadrature rule did not reach the requested tolerance"""

    def __init__(self, message: str, estimate: Optional[float] = None, value: Optional[complex] = None):
        super().__init__(message)
        self.estimate = estimate
        self.value = value

    def __str__(self):
        base = super().__str__()
        if self.estimate is None:
            return base
        return f"{base} (estimate={self.estimate:.3e}, value={self.value})"


class InfiniteMassError(DiskRepError):
    """A measure failed the finite total-variation precheck"""


class LatticeConstructionError(DiskRepError):
    """The ring construction cannot satisfy the cell containment properties"""

    def __init__(self, message: str, cell: Optional[int] = None):
        super().__init__(message)
        self.cell = cell


class TruncationError(DiskRepError):
    """A plane integral truncated at radius R has a tail above tolerance"""

    def __init__(self, message: str, tail: Optional[float] = None):
        super().__init__(message)
        self.tail = tail


class ExperimentError(DiskRepError):
    """Unknown experiment or invalid experiment configuration"""
