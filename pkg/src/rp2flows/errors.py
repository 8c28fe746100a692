"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """Raised when an input lies outside the modelled domain."""
