"""
Exception types for surface presentations and homomorphism checks.
"""

from braidkit.helpers import BraidkitError


class ThetaNotSurjectiveError(BraidkitError, ValueError):
    """
    Raised when θ sends every generator to 0, so it does not classify a double covering.

    Attributes:
        generators: Generators of the presentation.
    """

    def __init__(self, generators: list[str]) -> None:
        self.generators = generators
        super().__init__(
            "theta maps every generator to 0; a double covering needs some generator "
            "with theta = 1",
            suggestions=[f"Set theta=1 on one of: {', '.join(generators)}"],
        )


class HypothesisNotMetError(BraidkitError, ValueError):
    """
    Raised when a witness construction is requested outside its hypotheses.

    Attributes:
        construction: Name of the requested construction.
        reason: Which hypothesis failed.
    """

    def __init__(self, construction: str, reason: str) -> None:
        self.construction = construction
        self.reason = reason
        super().__init__(f"{construction} does not apply: {reason}")


class ImageNotInB2nnError(BraidkitError, ValueError):
    """
    Raised when a homomorphism sends a generator outside B²_{n,n}.

    Attributes:
        generator: Name of the offending generator.
        n: Block size.
    """

    def __init__(self, generator: str, n: int) -> None:
        self.generator = generator
        self.n = n
        super().__init__(
            f"Image of {generator} neither preserves nor swaps the blocks of size {n}"
        )
