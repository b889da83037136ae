"""Shared exception types."""


class CapExceededError(Exception):
    """An enumeration would exceed its configured resource cap."""


class InfeasibleError(Exception):
    """Requested parameters are ruled out before any work is attempted."""
