"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class KernelError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(KernelError):
    """Malformed textual or JSON input; carries the offset of the failure."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset


class DomainError(KernelError):
    """Input violates a mathematical precondition."""


class DimensionError(DomainError):
    """Shapes of matrices or index vectors do not line up."""


class PoleError(DomainError):
    """A zero letter or evaluation point meets a negative power."""


class DegeneracyError(DomainError):
    """A matrix that must be invertible is singular."""


class ConsistencyError(KernelError):
    """Two independent construction routes disagree; indicates a kernel bug."""
