"""
Garside left-greedy normal form: the word-problem engine for B_m.

The word is cut into maximal runs of same-sign letters that multiply to a simple
braid. A positive run is a simple factor x. A negative run x⁻¹ is rewritten as
Δ⁻¹·(Δx⁻¹); the Δ⁻¹ is moved to the front past the factors already collected, which
conjugates each of them by Δ. That conjugation is tracked lazily as a single parity
bit and applied once at the end.

Simple factors are 0-based image lists kept together with their inverses, so starting
and finishing sets are read off as bitmasks without rebuilding anything.
"""

import logging
from collections.abc import Iterator
from functools import lru_cache

from braidkit.braids.exceptions import StrandMismatchError
from braidkit.braids.models import BraidWord, Permutation
from braidkit.braids.words import compose, free_reduce, inverse
from braidkit.garside.models import NormalForm, SimpleBraid

logger: logging.Logger = logging.getLogger(__name__)

_Images = list[int]


def _tau(images: _Images) -> _Images:
    """Conjugate a simple factor by Δ (σ_i ↦ σ_{m−i})."""
    last = len(images) - 1
    return [last - images[last - p] for p in range(len(images))]


def _inverse_images(images: _Images) -> _Images:
    inv = [0] * len(images)
    for p, image in enumerate(images):
        inv[image] = p
    return inv


class _Simple:
    """A permutation braid under construction: images and inverse, updated in place."""

    __slots__ = ("images", "inv")

    def __init__(self, images: _Images) -> None:
        self.images = images
        self.inv = _inverse_images(images)

    def starting_mask(self) -> int:
        """Bit p is set iff the braid can start with σ_{p+1}."""
        imgs = self.images
        mask = 0
        for p in range(len(imgs) - 1):
            if imgs[p] > imgs[p + 1]:
                mask |= 1 << p
        return mask

    def finishing_mask(self) -> int:
        """Bit p is set iff the braid can end with σ_{p+1}."""
        inv = self.inv
        mask = 0
        for p in range(len(inv) - 1):
            if inv[p] > inv[p + 1]:
                mask |= 1 << p
        return mask

    def is_identity(self) -> bool:
        return all(image == p for p, image in enumerate(self.images))


def _left_weight(s: _Simple, t: _Simple) -> bool:
    """
    Make the pair ``(s, t)`` left-weighted in place, keeping the product ``s·t``.

    ``pending`` holds the σ_p that start ``t`` but do not finish ``s``. Each one is moved
    across (``s ← s·σ_p``, ``t ← σ_p⁻¹·t``); a move only changes the bits p−1, p and
    p+1, so the rest of the mask stays valid. Returns whether anything changed.
    """
    pending = t.starting_mask() & ~s.finishing_mask()
    if not pending:
        return False
    s_img, s_inv, t_img, t_inv = s.images, s.inv, t.images, t.inv
    last = len(s_img) - 1
    while pending:
        p = (pending & -pending).bit_length() - 1
        # s·σ_p exchanges the end positions p and p+1
        a, b = s_inv[p], s_inv[p + 1]
        s_img[a], s_img[b] = p + 1, p
        s_inv[p], s_inv[p + 1] = b, a
        # σ_p⁻¹·t exchanges the start positions p and p+1
        c, d = t_img[p], t_img[p + 1]
        t_img[p], t_img[p + 1] = d, c
        t_inv[d], t_inv[c] = p, p + 1
        for q in range(max(p - 1, 0), min(p + 2, last)):
            if t_img[q] > t_img[q + 1] and s_inv[q] < s_inv[q + 1]:
                pending |= 1 << q
            else:
                pending &= ~(1 << q)
    return True


def _append(factors: list[_Simple], simple: _Simple) -> None:
    """Right-multiply a left-weighted factor list by a simple factor (one domino pass)."""
    factors.append(simple)
    j = len(factors) - 2
    while j >= 0:
        if not _left_weight(factors[j], factors[j + 1]):
            break
        j -= 1
    while factors and factors[-1].is_identity():
        factors.pop()


def _simple_runs(m: int, letters: tuple[int, ...]) -> Iterator[tuple[int, _Images]]:
    """
    Yield ``(sign, images)`` for maximal simple runs of ``letters``.

    A positive run yields its simple braid x. A negative run σ_{b1}⁻¹⋯σ_{bk}⁻¹ is
    y⁻¹ with y = σ_{bk}⋯σ_{b1} simple and yields Δ·y⁻¹.
    """
    x, x_inv = list(range(m)), list(range(m))
    sign = 0
    for letter in letters:
        p = abs(letter) - 1
        step = 1 if letter > 0 else -1
        # x·σ_p stays simple iff σ_p does not finish x; σ_p·x iff σ_p does not start x
        fits = x_inv[p] < x_inv[p + 1] if step > 0 else x[p] < x[p + 1]
        if step != sign or not fits:
            if sign:
                yield sign, x if sign > 0 else [x_inv[m - 1 - i] for i in range(m)]
            x, x_inv = list(range(m)), list(range(m))
            sign = step
        if step > 0:
            a, b = x_inv[p], x_inv[p + 1]
            x[a], x[b] = p + 1, p
            x_inv[p], x_inv[p + 1] = b, a
        else:
            c, d = x[p], x[p + 1]
            x[p], x[p + 1] = d, c
            x_inv[d], x_inv[c] = p, p + 1
    if sign:
        yield sign, x if sign > 0 else [x_inv[m - 1 - i] for i in range(m)]


def _normalize(strands: int, letters: tuple[int, ...]) -> tuple[int, list[_Images]]:
    m = strands
    if m == 1:
        return 0, []
    reversal = list(range(m - 1, -1, -1))
    factors: list[_Simple] = []
    inf = 0
    # stored factors equal τ^flipped of the actual factors
    flipped = False
    for sign, images in _simple_runs(m, letters):
        if sign < 0:
            inf -= 1
            flipped = not flipped
        if flipped:
            images = _tau(images)
        _append(factors, _Simple(images))
        while factors and factors[0].images == reversal:
            factors.pop(0)
            inf += 1
    result = [f.images for f in factors]
    if flipped:
        result = [_tau(f) for f in result]
    return inf, result


@lru_cache(maxsize=4096)
def normal_form(w: BraidWord) -> NormalForm:
    """
    Compute the left-greedy normal form of ``w``.

    The word is freely reduced first; the result is invariant under free insertion
    of ``σ_iσ_i⁻¹`` and under Artin-relation rewrites of ``w``.

    Example:
        >>> normal_form(delta(4))  # NormalForm(strands=4, inf=1, factors=())
    """
    reduced = free_reduce(w)
    inf, factors = _normalize(reduced.strands, reduced.letters)
    logger.debug(
        "Normal form computed",
        extra={"strands": w.strands, "letters": len(w), "inf": inf, "factors": len(factors)},
    )
    return NormalForm(
        strands=w.strands,
        inf=inf,
        factors=tuple(
            SimpleBraid(permutation=Permutation(images=tuple(x + 1 for x in f)))
            for f in factors
        ),
    )


def is_trivial(w: BraidWord) -> bool:
    """True iff ``w`` represents the identity braid."""
    return normal_form(w).is_trivial


def are_equal(a: BraidWord, b: BraidWord) -> bool:
    """
    Decide whether two words represent the same braid.

    Raises:
        StrandMismatchError: If the strand counts differ.
    """
    if a.strands != b.strands:
        raise StrandMismatchError(a.strands, b.strands, "compare")
    return is_trivial(compose(a, inverse(b)))


def canonical_length(w: BraidWord) -> int:
    """Number of non-Δ simple factors in the normal form of ``w``."""
    return normal_form(w).canonical_length


def to_word(nf: NormalForm) -> BraidWord:
    """Expand a normal form back into a braid word."""
    return nf.to_word()
