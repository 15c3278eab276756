"""
Exception types for the Borsuk–Ulam classifier.
"""

from typing import Any

from braidkit.helpers import BraidkitError


class InvalidDescriptorError(BraidkitError, ValueError):
    """
    Raised when a triple descriptor names no actual (domain, involution, target) triple.

    Attributes:
        field: Descriptor field at fault (``"domain"``, ``"target"``, ``"n"``, ...).
        reason: Human-readable explanation.
    """

    def __init__(self, field: str, reason: str, suggestions: list[str] | None = None) -> None:
        self.field = field
        self.reason = reason
        super().__init__(f"Invalid descriptor ({field}): {reason}", suggestions=suggestions)


class WitnessFailureError(BraidkitError, RuntimeError):
    """
    Raised when a constructive witness disagrees with a classifier verdict.

    Attributes:
        check: Name of the failed check.
        expected: What the verdict requires.
        observed: What the construction produced.
    """

    def __init__(self, check: str, expected: Any, observed: Any) -> None:
        self.check = check
        self.expected = expected
        self.observed = observed
        super().__init__(f"Witness check {check!r} failed: expected {expected}, observed {observed}")
