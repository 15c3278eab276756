"""
Presentation constructors, θ bookkeeping and Reidemeister–Schreier generators of ker θ.
"""

import itertools
import logging
from collections.abc import Iterator, Mapping

from braidkit.surfaces.exceptions import ThetaNotSurjectiveError
from braidkit.surfaces.models import GroupWord, SurfaceKind, SurfacePresentation, surface_generators

logger: logging.Logger = logging.getLogger(__name__)


def orientable(m: int, theta: Mapping[str, int]) -> SurfacePresentation:
    """Kind I: the orientable surface of genus ``m``."""
    return SurfacePresentation(kind=SurfaceKind.ORIENTABLE, m=m, theta=dict(theta))


def non_orientable_even(m: int, theta: Mapping[str, int]) -> SurfacePresentation:
    """Kind II: the non-orientable surface of genus ``2m + 2``."""
    return SurfacePresentation(kind=SurfaceKind.NON_ORIENTABLE_EVEN, m=m, theta=dict(theta))


def non_orientable_odd(m: int, theta: Mapping[str, int]) -> SurfacePresentation:
    """Kind III: the non-orientable surface of genus ``2m + 1``."""
    return SurfacePresentation(kind=SurfaceKind.NON_ORIENTABLE_ODD, m=m, theta=dict(theta))


def theta_hat_delta(p: SurfacePresentation) -> int | None:
    """θ(u) for kind II, θ(c) for kind III, and None for kind I where δ = 1."""
    generator = p.delta_generator
    return None if generator is None else p.theta[generator]


def delta_word(p: SurfacePresentation) -> GroupWord:
    """The distinguished element δ as a word (empty for kind I)."""
    generator = p.delta_generator
    return () if generator is None else ((generator, 1),)


def theta_of(p: SurfacePresentation, word: GroupWord) -> int:
    """θ extended to words in the generators."""
    return sum(p.theta[g] for g, _ in word) % 2


def free_reduce_group_word(word: GroupWord) -> GroupWord:
    stack: list[tuple[str, int]] = []
    for g, e in word:
        if stack and stack[-1] == (g, -e):
            stack.pop()
        else:
            stack.append((g, e))
    return tuple(stack)


def invert_group_word(word: GroupWord) -> GroupWord:
    return tuple((g, -e) for g, e in reversed(word))


def format_group_word(word: GroupWord) -> str:
    """Render ``(("u", 1), ("v", -1))`` as ``"u v^-1"``; the empty word is ``"1"``."""
    if not word:
        return "1"
    return " ".join(g if e == 1 else f"{g}^-1" for g, e in word)


def schreier_kernel_generators(
    p: SurfacePresentation, transversal: str | None = None
) -> list[GroupWord]:
    """
    Generators of ker θ from the transversal {1, t}.

    For each generator g: ``g`` and ``t g t⁻¹`` when θ(g) = 0; ``g t⁻¹`` and ``t g`` when
    θ(g) = 1. Words are freely reduced, trivial ones dropped, duplicates removed.

    Args:
        p: Presentation with surjective θ.
        transversal: Generator t with θ(t) = 1. Defaults to the first such generator.

    Raises:
        ThetaNotSurjectiveError: If θ vanishes on every generator.
        ValueError: If ``transversal`` is not a generator with θ = 1.
    """
    if not p.is_surjective:
        raise ThetaNotSurjectiveError(p.generators)
    if transversal is None:
        transversal = next(g for g in p.generators if p.theta[g] == 1)
    elif p.theta.get(transversal) != 1:
        raise ValueError(f"transversal {transversal!r} must be a generator with theta = 1")
    t = transversal
    result: list[GroupWord] = []
    dropped = 0
    for g in p.generators:
        if p.theta[g] == 0:
            candidates = [((g, 1),), ((t, 1), (g, 1), (t, -1))]
        else:
            candidates = [((g, 1), (t, -1)), ((t, 1), (g, 1))]
        for word in candidates:
            reduced = free_reduce_group_word(word)
            if not reduced:
                dropped += 1
            elif reduced not in result:
                result.append(reduced)
    logger.debug(
        "Schreier generators computed",
        extra={"kind": p.kind.value, "m": p.m, "transversal": t, "count": len(result), "dropped": dropped},
    )
    return result


def enumerate_presentations(
    max_m: int,
    kinds: tuple[SurfaceKind, ...] = tuple(SurfaceKind),
    include_projective_plane: bool = False,
) -> Iterator[SurfacePresentation]:
    """
    Yield every presentation with ``m <= max_m`` and every surjective θ.

    Kind III with m = 0 (the projective plane, whose double cover is the sphere) is
    skipped unless ``include_projective_plane`` is set.
    """
    for kind in kinds:
        low = 1 if kind is SurfaceKind.ORIENTABLE else 0
        if kind is SurfaceKind.NON_ORIENTABLE_ODD and not include_projective_plane:
            low = 1
        for m in range(low, max_m + 1):
            gens = surface_generators(kind, m)
            for values in itertools.product((0, 1), repeat=len(gens)):
                if not any(values):
                    continue
                yield SurfacePresentation(kind=kind, m=m, theta=dict(zip(gens, values, strict=True)))
