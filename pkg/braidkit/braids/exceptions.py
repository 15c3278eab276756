"""
Exception types for the braidkit braid-word layer.
"""

from braidkit.helpers import BraidkitError


class StrandMismatchError(BraidkitError, ValueError):
    """
    Raised when two braid words on different strand counts are combined.

    Attributes:
        left: Strand count of the first operand.
        right: Strand count of the second operand.
        operation: Name of the operation that was attempted.

    Example:
        >>> try:
        ...     compose(BraidWord.identity(3), BraidWord.identity(4))
        ... except StrandMismatchError as exc:
        ...     print(exc.left, exc.right)  # 3 4
    """

    def __init__(self, left: int, right: int, operation: str = "compose") -> None:
        self.left = left
        self.right = right
        self.operation = operation
        super().__init__(
            f"Cannot {operation} braids on {left} and {right} strands",
            suggestions=["Use reindex() to embed the smaller braid explicitly"],
        )


class GeneratorIndexError(BraidkitError, IndexError):
    """
    Raised when a generator index does not fit the declared strand count.

    Attributes:
        index: The offending generator index (for A_{i,j} the pair is in ``reason``).
        strands: Declared strand count.
        reason: Human-readable explanation.
    """

    def __init__(self, index: int, strands: int, reason: str = "") -> None:
        self.index = index
        self.strands = strands
        self.reason = reason or f"generator s{index} needs 1 <= {index} <= {strands - 1}"
        super().__init__(
            f"Invalid generator on {strands} strands: {self.reason}",
            suggestions=[f"Valid Artin generators on {strands} strands are s1..s{strands - 1}"]
            if strands > 1
            else ["A braid on 1 strand has no generators"],
        )
