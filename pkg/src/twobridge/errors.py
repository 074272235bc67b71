"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """Raised when an input violates a documented precondition."""


class MoveError(DomainError):
    """Raised when a T-move is applied outside its applicability range."""


class ModelViolationError(RuntimeError):
    """Raised when the diagram walk breaks a structural invariant.

    This indicates a bug in the combinatorial model, not bad user input;
    it is never expected for admissible pairs.
    """


class OracleShapeError(RuntimeError):
    """Raised when the closed-form polynomial oracle produces coefficients
    outside the expected shape (a zero or sign break inside the range)."""
