"""
Membership predicates for B_{n,n} and B²_{n,n} and the two Z₂-valued homomorphisms:
the block sign ``pi_sign`` on B²_{n,n} and ``epsilon`` on B_{n,n}.
"""

import logging
from collections import defaultdict

from braidkit.braids.exceptions import StrandMismatchError
from braidkit.braids.models import BraidWord, Permutation
from braidkit.braids.words import permutation_of
from braidkit.mixed.exceptions import EpsilonParityError, NotInB2nnError, NotInBnnError
from braidkit.mixed.models import MixedContext

logger: logging.Logger = logging.getLogger(__name__)


def _checked_permutation(w: BraidWord, ctx: MixedContext) -> Permutation:
    if w.strands != ctx.strands:
        raise StrandMismatchError(w.strands, ctx.strands, "test membership of")
    return permutation_of(w)


def _preserves_blocks(perm: Permutation, n: int) -> bool:
    return all(perm(p) <= n for p in range(1, n + 1))


def _swaps_blocks(perm: Permutation, n: int) -> bool:
    return all(perm(p) > n for p in range(1, n + 1))


def in_bnn(w: BraidWord, ctx: MixedContext) -> bool:
    """True iff the permutation of ``w`` maps each block onto itself."""
    return _preserves_blocks(_checked_permutation(w, ctx), ctx.n)


def in_bnn2(w: BraidWord, ctx: MixedContext) -> bool:
    """True iff the permutation of ``w`` preserves or swaps the two blocks."""
    perm = _checked_permutation(w, ctx)
    return _preserves_blocks(perm, ctx.n) or _swaps_blocks(perm, ctx.n)


def pi_sign(w: BraidWord, ctx: MixedContext) -> int:
    """
    0 if ``w`` preserves the blocks, 1 if it swaps them.

    Raises:
        NotInB2nnError: If ``w`` does neither.
        StrandMismatchError: If ``w`` is not on ``2n`` strands.
    """
    perm = _checked_permutation(w, ctx)
    if _preserves_blocks(perm, ctx.n):
        return 0
    if _swaps_blocks(perm, ctx.n):
        return 1
    raise NotInB2nnError(ctx.n, perm)


def epsilon(w: BraidWord, ctx: MixedContext) -> int:
    """
    Half the signed number of crossings between strands of different blocks, mod 2.

    Each strand is followed from its starting position; a letter ±σ_i adds ±1 to the
    pair of strands it crosses whenever they started in different blocks. A
    block-preserving braid returns every such pair to its starting order, so each
    count is even.

    Raises:
        NotInBnnError: If ``w`` does not preserve the blocks.
        EpsilonParityError: If some cross-block count is odd.
    """
    perm = _checked_permutation(w, ctx)
    n = ctx.n
    if not _preserves_blocks(perm, n):
        raise NotInBnnError(n, perm)
    # at[pos] = 0-based origin of the strand now at pos
    at = list(range(ctx.strands))
    counts: defaultdict[tuple[int, int], int] = defaultdict(int)
    for letter in w.letters:
        p = abs(letter) - 1
        a, b = at[p], at[p + 1]
        if (a < n) != (b < n):
            counts[(min(a, b), max(a, b))] += 1 if letter > 0 else -1
        at[p], at[p + 1] = b, a
    total = 0
    for (a, b), crossings in counts.items():
        if crossings % 2:
            raise EpsilonParityError((a + 1, b + 1), crossings)
        total += crossings // 2
    logger.debug(
        "Epsilon computed",
        extra={"n": n, "letters": len(w), "pairs": len(counts), "value": total % 2},
    )
    return total % 2
