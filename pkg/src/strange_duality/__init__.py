"""Exact K(P2) arithmetic, SL(3) characters and Poincare series for
strange-duality dimension checks on the projective plane."""

from strange_duality.errors import (
    AuditError,
    DomainError,
    InconsistentConstraints,
    InsufficientData,
    InvariantViolation,
    UnsupportedCase,
)

__version__ = "0.1.0"

__all__ = [
    "AuditError",
    "DomainError",
    "InconsistentConstraints",
    "InsufficientData",
    "InvariantViolation",
    "UnsupportedCase",
]
