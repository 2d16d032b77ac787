"""Exceptions shared across modules."""

from __future__ import annotations

__all__ = ["CapExceeded"]


class CapExceeded(ValueError):
    """A problem size exceeds the configured cap for exact enumeration."""
