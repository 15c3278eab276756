"""
Exception types for the braid expression parser.
"""

from braidkit.helpers import BraidkitError


class BraidSyntaxError(BraidkitError, ValueError):
    """
    Raised when a braid expression does not match the grammar.

    Attributes:
        text: The full input text.
        offset: Byte offset (UTF-8) of the offending token.
        reason: Human-readable explanation.

    Example:
        >>> try:
        ...     parse_expr("s1 ^")
        ... except BraidSyntaxError as exc:
        ...     print(exc.offset)  # 4
    """

    def __init__(
        self, text: str, offset: int, reason: str, suggestions: list[str] | None = None
    ) -> None:
        self.text = text
        self.offset = offset
        self.reason = reason
        super().__init__(f"Syntax error at byte {offset}: {reason}", suggestions)

    def caret_line(self) -> str:
        """The input text followed by a caret under the error position."""
        prefix = self.text.encode("utf-8")[: self.offset].decode("utf-8", errors="ignore")
        return f"{self.text}\n{' ' * len(prefix)}^"


class ExpressionTooLargeError(BraidkitError, ValueError):
    """
    Raised when a power would expand to more letters than ``limit``.

    Attributes:
        length: Letter count the power would produce.
        limit: Largest accepted letter count.
    """

    def __init__(self, length: int, limit: int) -> None:
        self.length = length
        self.limit = limit
        super().__init__(
            f"Expression expands to {length} letters, more than the limit of {limit}",
            [
                "Lower the exponents, or nest fewer powers",
                "Use D<m> or F<m> for half and full twists instead of long powers",
            ],
        )
