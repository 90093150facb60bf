"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """Raised when an operation would exceed its enumeration or LP size budget."""
