"""
Exception types for the mixed braid group layer.
"""

from braidkit.braids.models import Permutation
from braidkit.helpers import BraidkitError


class NotInBnnError(BraidkitError, ValueError):
    """
    Raised when a braid does not preserve the two blocks {1..n} and {n+1..2n}.

    Attributes:
        n: Block size.
        permutation: Permutation of the offending braid.
    """

    def __init__(self, n: int, permutation: Permutation) -> None:
        self.n = n
        self.permutation = permutation
        super().__init__(
            f"Braid with permutation [{permutation.one_line()}] is not in B_{{{n},{n}}}",
            suggestions=["epsilon is only defined on block-preserving braids"],
        )


class NotInB2nnError(BraidkitError, ValueError):
    """
    Raised when a braid neither preserves nor swaps the two blocks.

    Attributes:
        n: Block size.
        permutation: Permutation of the offending braid.
    """

    def __init__(self, n: int, permutation: Permutation) -> None:
        self.n = n
        self.permutation = permutation
        super().__init__(
            f"Braid with permutation [{permutation.one_line()}] neither preserves nor "
            f"swaps the blocks of size {n}"
        )


class EpsilonParityError(BraidkitError, RuntimeError):
    """
    Raised when a cross-block strand pair of a block-preserving braid crosses an odd
    number of times. This cannot happen for a correct crossing count.

    Attributes:
        pair: The two strand origins (1-based).
        crossings: Signed crossing count observed for the pair.
    """

    def __init__(self, pair: tuple[int, int], crossings: int) -> None:
        self.pair = pair
        self.crossings = crossings
        super().__init__(
            f"Strands {pair[0]} and {pair[1]} cross {crossings} times in a "
            "block-preserving braid; expected an even count"
        )
