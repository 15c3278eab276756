"""
Helper functions to improve user experience and provide better error messages.
"""


class BraidkitError(Exception):
    """Base exception for braidkit with helpful error messages."""

    def __init__(self, message: str, suggestions: list[str] | None = None):
        self.suggestions = suggestions or []
        super().__init__(message)

    def __str__(self) -> str:
        msg = super().__str__()
        if self.suggestions:
            suggestions_text = "\n".join(f"  • {s}" for s in self.suggestions)
            msg += f"\n\nSuggestions:\n{suggestions_text}"
        return msg


def check_strands(strands: int) -> int:
    """
    Validate a declared strand count.

    Args:
        strands: Number of strands of a braid word.

    Returns:
        The strand count unchanged.

    Raises:
        ValueError: If ``strands`` is smaller than 1.
    """
    if strands < 1:
        raise ValueError(f"strand count must be at least 1, got {strands}")
    return strands


def create_user_friendly_error(error: Exception, context: str = "") -> str:
    """
    Convert technical errors into a single diagnostic line for the CLI.

    Library errors keep only their headline; the first suggestion, when present, is
    appended after a semicolon.

    Args:
        error: The original exception
        context: Additional context about what was being attempted

    Returns:
        User-friendly error message
    """
    where = f" while {context}" if context else ""

    if isinstance(error, BraidkitError):
        headline = error.args[0] if error.args else type(error).__name__
        hint = f"; {error.suggestions[0]}" if error.suggestions else ""
        return f"error{where}: {headline}{hint}"

    return f"{type(error).__name__}{where}: {error}"
