"""Exception types shared across the package."""

from __future__ import annotations


class SrlScoreError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SrlScoreError):
    """Malformed interchange-format input (bad bytes or bad JSON syntax)."""

    def __init__(self, message: str, byte_offset: int | None = None):
        if byte_offset is not None:
            message = f"{message} (byte offset {byte_offset})"
        super().__init__(message)
        self.byte_offset = byte_offset


class DocumentValidationError(SrlScoreError):
    """Structurally valid JSON that violates the document schema.

    Messages always name the offending sentence/frame/cluster index.
    """


class ConfigError(SrlScoreError):
    """Invalid scoring configuration (weights, similarity setup, variants)."""


class UndefinedCorrelationError(SrlScoreError):
    """Correlation requested on a constant vector (zero variance)."""
