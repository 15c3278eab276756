"""
Word-level k-cabling B²_{n,n} → B²_{nk,nk}.

Every strand is replaced by ``k`` parallel strands. A crossing σ_i becomes the block
crossing of the k-strand blocks at positions i and i+1, which is ``omega(k)`` shifted by
``(i−1)k``; σ_i⁻¹ becomes its inverse word. Both sides of every Artin relation cable
to positive braids in which each pair of strands crosses at most once, so relations
are preserved and the map is a group homomorphism.
"""

import logging
from functools import lru_cache

from braidkit.braids.models import BraidWord, Permutation
from braidkit.braids.words import omega, permutation_of
from braidkit.mixed.models import MixedContext
from braidkit.mixed.subgroups import pi_sign

logger: logging.Logger = logging.getLogger(__name__)


def _check_multiplicity(k: int) -> None:
    if k < 1:
        raise ValueError(f"cable multiplicity must be at least 1, got {k}")


@lru_cache(maxsize=256)
def _cabled_letter(letter: int, k: int) -> tuple[int, ...]:
    offset = (abs(letter) - 1) * k
    shifted = tuple(x + offset for x in omega(k).letters)
    if letter > 0:
        return shifted
    return tuple(-x for x in reversed(shifted))


@lru_cache(maxsize=1024)
def cable(w: BraidWord, k: int) -> BraidWord:
    """
    Replace every strand of ``w`` by ``k`` parallel strands.

    Example:
        >>> cable(BraidWord(strands=2, letters=(1,)), 2).letters  # (2, 3, 1, 2)
    """
    _check_multiplicity(k)
    if k == 1:
        return w
    letters = tuple(x for letter in w.letters for x in _cabled_letter(letter, k))
    logger.debug(
        "Word cabled", extra={"strands": w.strands, "k": k, "letters": len(letters)}
    )
    return BraidWord(strands=w.strands * k, letters=letters)


def inflate_permutation(perm: Permutation, k: int) -> Permutation:
    """
    Block inflation: position ``(p−1)k + r`` goes to ``(perm(p)−1)k + r`` for r in 1..k.
    """
    _check_multiplicity(k)
    images = tuple(
        (perm(p) - 1) * k + r for p in range(1, perm.size + 1) for r in range(1, k + 1)
    )
    return Permutation(images=images)


def check_cabling_diagram(w: BraidWord, k: int, ctx: MixedContext) -> bool:
    """
    True iff cabling commutes with the block sign: ``pi_sign(cable(w, k))`` in the
    inflated context equals ``pi_sign(w)``.

    Raises:
        NotInB2nnError: If ``w`` is not in B²_{n,n}.
    """
    before = pi_sign(w, ctx)
    after = pi_sign(cable(w, k), ctx.inflate(k))
    return before == after


def cabled_permutation_matches(w: BraidWord, k: int) -> bool:
    """True iff the permutation of ``cable(w, k)`` is the block inflation of ``w``'s."""
    return permutation_of(cable(w, k)) == inflate_permutation(permutation_of(w), k)
