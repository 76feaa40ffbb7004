"""Error types shared across the package."""

from __future__ import annotations


class ValidationError(ValueError):
    """Raised for malformed or out-of-range input data."""


class RejectionError(Exception):
    """Raised when input is well formed but mathematically inadmissible.

    Carries a stable reason ``code`` (a short phrase) and an optional
    JSON-serializable ``witness`` describing what failed.
    """

    def __init__(self, code: str, witness=None):
        super().__init__(code if witness is None else f"{code}: {witness!r}")
        self.code = code
        self.witness = witness
