"""
Braid-word operations: free reduction, products, the permutation homomorphism and the
distinguished elements A_{i,j}, Δ_m, Δ_m², ω_n and Ω.

All functions are pure and accept/return immutable ``BraidWord`` values. Words are
never reduced implicitly except by ``free_reduce`` and the reducing products
``compose`` and ``product``.
"""

import logging
import random
from collections.abc import Iterable
from functools import lru_cache

from braidkit.braids.exceptions import GeneratorIndexError, StrandMismatchError
from braidkit.braids.models import BraidWord, Permutation
from braidkit.helpers import check_strands

logger: logging.Logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Reduction and products
# ---------------------------------------------------------------------------


def _reduce_letters(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def free_reduce(w: BraidWord) -> BraidWord:
    """
    Cancel adjacent inverse pairs until none remain.

    Example:
        >>> free_reduce(BraidWord(strands=3, letters=(1, 2, -2, 1))).letters  # (1, 1)
    """
    reduced = _reduce_letters(w.letters)
    if len(reduced) == len(w.letters):
        return w
    return BraidWord(strands=w.strands, letters=reduced)


def _common_strands(words: tuple[BraidWord, ...], operation: str) -> int:
    strands = words[0].strands
    for w in words[1:]:
        if w.strands != strands:
            raise StrandMismatchError(strands, w.strands, operation)
    return strands


def concat(*words: BraidWord) -> BraidWord:
    """
    Concatenate words literally, without any cancellation.

    Raises:
        StrandMismatchError: If the words live on different strand counts.
        ValueError: If no word is given.
    """
    if not words:
        raise ValueError("concat() needs at least one word")
    strands = _common_strands(words, "concatenate")
    return BraidWord(strands=strands, letters=tuple(x for w in words for x in w.letters))


def compose(a: BraidWord, b: BraidWord) -> BraidWord:
    """Return the freely reduced product ``a·b`` ("a first, then b")."""
    if a.strands != b.strands:
        raise StrandMismatchError(a.strands, b.strands)
    return BraidWord(strands=a.strands, letters=_reduce_letters(a.letters + b.letters))


def product(*words: BraidWord) -> BraidWord:
    """Freely reduced product of one or more words."""
    return free_reduce(concat(*words))


def inverse(w: BraidWord) -> BraidWord:
    """Reverse the letter order and flip every sign."""
    return BraidWord(strands=w.strands, letters=tuple(-x for x in reversed(w.letters)))


def power(w: BraidWord, k: int) -> BraidWord:
    """
    Return ``w`` repeated ``k`` times, literally.

    Negative ``k`` repeats the inverse word; ``k == 0`` gives the empty word.
    """
    base = w if k >= 0 else inverse(w)
    return BraidWord(strands=w.strands, letters=base.letters * abs(k))


def conjugate(a: BraidWord, b: BraidWord) -> BraidWord:
    """Return the literal word ``a b a⁻¹``."""
    return concat(a, b, inverse(a))


def commutator(a: BraidWord, b: BraidWord) -> BraidWord:
    """Return the literal word ``[a, b] = a b a⁻¹ b⁻¹``."""
    return concat(a, b, inverse(a), inverse(b))


def generator(index: int, strands: int, exponent: int = 1) -> BraidWord:
    """
    Return ``σ_index ** exponent`` on ``strands`` strands.

    Raises:
        GeneratorIndexError: If ``index`` is not in ``1..strands-1``.
    """
    if not 1 <= index <= strands - 1:
        raise GeneratorIndexError(index, strands)
    sign = 1 if exponent >= 0 else -1
    return BraidWord(strands=strands, letters=(sign * index,) * abs(exponent))


def reindex(w: BraidWord, offset: int, strands: int) -> BraidWord:
    """
    Embed ``w`` into a braid group on ``strands`` strands, shifted right by ``offset``.

    Strand ``p`` of ``w`` becomes strand ``p + offset``; the remaining strands stay
    straight.

    Raises:
        GeneratorIndexError: If the shifted word does not fit.
    """
    if offset < 0 or offset + w.strands > strands:
        raise GeneratorIndexError(
            offset + w.strands - 1,
            strands,
            f"cannot place {w.strands} strands at offset {offset} inside {strands} strands",
        )
    return BraidWord(
        strands=strands,
        letters=tuple(x + offset if x > 0 else x - offset for x in w.letters),
    )


def flip(w: BraidWord) -> BraidWord:
    """
    Apply σ_i ↦ σ_{m−i} letter by letter.

    The result equals ``Δ_m · w · Δ_m⁻¹`` in the group.
    """
    m = w.strands
    return BraidWord(
        strands=m, letters=tuple(m - x if x > 0 else -(m + x) for x in w.letters)
    )


# ---------------------------------------------------------------------------
# Permutation homomorphism
# ---------------------------------------------------------------------------


def permutation_of(w: BraidWord) -> Permutation:
    """
    Image of ``w`` in the symmetric group S_m.

    σ_i maps to the transposition (i, i+1). The result sends each starting position to
    the ending position of the strand that starts there.

    Example:
        >>> permutation_of(omega(2)).images  # (3, 4, 1, 2)
    """
    # at[pos] = starting position of the strand now at pos (0-based)
    at = list(range(w.strands))
    for letter in w.letters:
        p = abs(letter) - 1
        at[p], at[p + 1] = at[p + 1], at[p]
    images = [0] * w.strands
    for position, origin in enumerate(at, start=1):
        images[origin] = position
    return Permutation(images=tuple(images))


def is_pure(w: BraidWord) -> bool:
    """True iff ``w`` induces the identity permutation."""
    return permutation_of(w).is_identity


# ---------------------------------------------------------------------------
# Distinguished elements
# ---------------------------------------------------------------------------


def a_gen(i: int, j: int, m: int) -> BraidWord:
    """
    The pure braid generator ``A_{i,j} = σ_{j−1}⋯σ_{i+1} σ_i² σ_{i+1}⁻¹⋯σ_{j−1}⁻¹``.

    Raises:
        GeneratorIndexError: Unless ``1 <= i < j <= m``.
    """
    if not 1 <= i < j <= m:
        raise GeneratorIndexError(i, m, f"A_{{{i},{j}}} needs 1 <= i < j <= {m}")
    conjugator = tuple(range(j - 1, i, -1))
    letters = conjugator + (i, i) + tuple(-x for x in reversed(conjugator))
    return BraidWord(strands=m, letters=letters)


def a_gen_cross(i: int, j: int, n: int) -> BraidWord:
    """
    Cross-block ``A_{i,j}`` on 2n strands written around ``A_{n,n+1} = σ_n²``.

    The word is ``(σ_{j−1}⋯σ_{n+1})(σ_i⁻¹⋯σ_{n−1}⁻¹) σ_n² (σ_i⋯σ_{n−1})(σ_{n+1}⁻¹⋯σ_{j−1}⁻¹)``,
    kept literally. It is equal in the group to ``a_gen(i, j, 2n)``.

    Raises:
        GeneratorIndexError: Unless ``1 <= i <= n < j <= 2n``.
    """
    if n < 1 or not (1 <= i <= n and n + 1 <= j <= 2 * n):
        raise GeneratorIndexError(
            i, 2 * max(n, 1), f"cross-block A_{{{i},{j}}} needs 1 <= i <= {n} < j <= {2 * n}"
        )
    letters = (
        tuple(range(j - 1, n, -1))
        + tuple(-k for k in range(i, n))
        + (n, n)
        + tuple(range(i, n))
        + tuple(-k for k in range(n + 1, j))
    )
    return BraidWord(strands=2 * n, letters=letters)


@lru_cache(maxsize=64)
def delta(m: int) -> BraidWord:
    """The half twist ``Δ_m = (σ_1⋯σ_{m−1})(σ_1⋯σ_{m−2})⋯(σ_1σ_2)(σ_1)``."""
    check_strands(m)
    letters = tuple(i for top in range(m - 1, 0, -1) for i in range(1, top + 1))
    return BraidWord(strands=m, letters=letters)


@lru_cache(maxsize=64)
def full_twist(m: int) -> BraidWord:
    """The full twist ``Δ_m² = A_{1,2}(A_{1,3}A_{2,3})⋯(A_{1,m}⋯A_{m−1,m})``."""
    check_strands(m)
    if m == 1:
        return BraidWord.identity(1)
    return concat(*(a_gen(i, j, m) for j in range(2, m + 1) for i in range(1, j)))


@lru_cache(maxsize=64)
def omega(n: int) -> BraidWord:
    """
    The block-swapping braid ``ω_n = ∏_{j=0}^{n−1} ∏_{i=n−j}^{2n−1−j} σ_i`` on 2n strands.

    Every strand crosses exactly the n strands of the other block, once each.
    """
    if n < 1:
        raise ValueError(f"block size must be at least 1, got {n}")
    letters = tuple(i for j in range(n) for i in range(n - j, 2 * n - j))
    return BraidWord(strands=2 * n, letters=letters)


def big_omega() -> BraidWord:
    """
    ``Ω = σ_2 σ_3 σ_1⁻¹ σ_2⁻¹`` on 4 strands.

    Ω swaps the two blocks of size 2 and satisfies ``Δ_4 Ω Δ_4⁻¹ = Ω⁻¹``.
    """
    return BraidWord(strands=4, letters=(2, 3, -1, -2))


# ---------------------------------------------------------------------------
# Random words
# ---------------------------------------------------------------------------


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    """Uniformly random word of exactly ``length`` letters (empty when ``strands == 1``)."""
    if strands < 2:
        return BraidWord.identity(strands)
    letters = tuple(
        rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)
    )
    return BraidWord(strands=strands, letters=letters)
