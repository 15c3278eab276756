"""
Explicit lifts of θ into B²_{n,n}.

``witness_split`` and ``witness_nonsplit`` handle θ(δ) = 0 for every n.
``witness_four_strand`` handles θ(δ) = 1 in B²_{2,2} using Ω and Δ_4, and
``witness_even_n`` cables it to every even n. ``delta_normalized_relator`` rewrites
the relator image of an arbitrary lift ``g ↦ b_g Δ^{θ(g)}`` so that every Δ appears
either as a conjugator or in one central Δ².
"""

import logging
from collections.abc import Mapping

from braidkit.braids.models import BraidWord
from braidkit.braids.words import (
    big_omega,
    concat,
    delta,
    inverse,
    omega,
    permutation_of,
    power,
)
from braidkit.cabling.cable import cable
from braidkit.mixed.exceptions import NotInBnnError
from braidkit.mixed.models import MixedContext
from braidkit.mixed.subgroups import in_bnn
from braidkit.surfaces.exceptions import HypothesisNotMetError
from braidkit.surfaces.models import GroupHom, SurfaceKind, SurfacePresentation
from braidkit.surfaces.presentations import theta_hat_delta

logger: logging.Logger = logging.getLogger(__name__)


def _require_delta_trivial(p: SurfacePresentation, construction: str) -> None:
    if theta_hat_delta(p) == 1:
        raise HypothesisNotMetError(construction, "theta(delta) = 1")


def _require_delta_nontrivial(p: SurfacePresentation, construction: str) -> None:
    if theta_hat_delta(p) != 1:
        raise HypothesisNotMetError(
            construction, "needs a non-orientable orbit space with theta(delta) = 1"
        )


def witness_split(p: SurfacePresentation, n: int) -> GroupHom:
    """
    ``g ↦ ω_n^{θ(g)}``: a lift of θ with ker θ landing in the pure braids.

    Raises:
        HypothesisNotMetError: If θ(δ) = 1.
    """
    _require_delta_trivial(p, "split witness")
    w = omega(n)
    return GroupHom(
        source=p, n=n, images={g: power(w, p.theta[g]) for g in p.generators}
    )


def witness_nonsplit(p: SurfacePresentation, n: int) -> GroupHom:
    """
    ``g ↦ (σ_1 ω_n)^{θ(g)}``: a lift of θ whose square of a θ = 1 generator is not pure.

    Raises:
        HypothesisNotMetError: If θ(δ) = 1, or if n < 2 (σ_1ω_1 = σ_1² is pure).
    """
    _require_delta_trivial(p, "non-split witness")
    if n < 2:
        raise HypothesisNotMetError("non-split witness", "needs n >= 2")
    x = concat(BraidWord(strands=2 * n, letters=(1,)), omega(n))
    return GroupHom(
        source=p, n=n, images={g: power(x, p.theta[g]) for g in p.generators}
    )


def witness_four_strand(p: SurfacePresentation) -> GroupHom:
    """
    A non-split lift of θ into B²_{2,2} when θ(δ) = 1.

    Kind II: ``u ↦ Ω``, ``v ↦ Δ_4 Ω^{1−θ(v)}``.
    Kind III with θ(a_1) or θ(a_2) = 1: ``c ↦ Ω``,
    ``a_1 ↦ Δ_4^{θ(a_2)} Ω^{θ(a_1)+θ(a_2)−2}``, ``a_2 ↦ Δ_4^{1−θ(a_2)} Ω``.
    Kind III with θ(a_1) = θ(a_2) = 0: ``c ↦ Ω``, ``a_1 ↦ σ_2 Ω⁻¹ σ_2⁻¹``,
    ``a_2 ↦ σ_2 σ_3² σ_2⁻¹``.
    Every remaining handle generator ``a_k`` goes to ``Ω^{θ(a_k)}``.

    Raises:
        HypothesisNotMetError: If θ(δ) ≠ 1, or for the projective plane (kind III, m = 0).
    """
    _require_delta_nontrivial(p, "four-strand witness")
    if p.kind is SurfaceKind.NON_ORIENTABLE_ODD and p.m == 0:
        raise HypothesisNotMetError("four-strand witness", "needs m >= 1 for kind III")

    big = big_omega()
    d4 = delta(4)
    theta = p.theta
    images: dict[str, BraidWord] = {
        g: power(big, theta[g]) for g in p.generators if g.startswith("a")
    }

    if p.kind is SurfaceKind.NON_ORIENTABLE_EVEN:
        case = "i"
        images["u"] = big
        images["v"] = concat(d4, power(big, 1 - theta["v"]))
    else:
        images["c"] = big
        i1, i2 = theta["a1"], theta["a2"]
        if i1 or i2:
            case = "ii"
            images["a1"] = concat(power(d4, i2), power(big, i1 + i2 - 2))
            images["a2"] = concat(power(d4, 1 - i2), big)
        else:
            case = "iii"
            s2 = BraidWord(strands=4, letters=(2,))
            images["a1"] = concat(s2, inverse(big), inverse(s2))
            images["a2"] = BraidWord(strands=4, letters=(2, 3, 3, -2))

    logger.debug(
        "Four-strand witness built", extra={"kind": p.kind.value, "m": p.m, "case": case}
    )
    return GroupHom(source=p, n=2, images=images)


def witness_even_n(p: SurfacePresentation, n: int) -> GroupHom:
    """
    ``witness_four_strand`` cabled with multiplicity ``n / 2``.

    Raises:
        HypothesisNotMetError: If n is odd or θ(δ) ≠ 1.
    """
    if n < 2 or n % 2:
        raise HypothesisNotMetError("even-n witness", f"n = {n} is not a positive even number")
    base = witness_four_strand(p)
    k = n // 2
    return GroupHom(
        source=p, n=n, images={g: cable(word, k) for g, word in base.images.items()}
    )


def lift_from_blocks(
    p: SurfacePresentation, blocks: Mapping[str, BraidWord], n: int
) -> GroupHom:
    """
    The assignment ``g ↦ b_g Δ_{2n}^{θ(g)}`` for block-preserving ``b_g``.

    Every lift of θ has this shape; it commutes with the block sign by construction.

    Raises:
        NotInBnnError: If some ``b_g`` does not preserve the blocks.
    """
    ctx = MixedContext(n=n)
    _check_blocks(p, blocks, ctx)
    d = delta(2 * n)
    return GroupHom(
        source=p,
        n=n,
        images={g: concat(blocks[g], power(d, p.theta[g])) for g in p.generators},
    )


def _check_blocks(
    p: SurfacePresentation, blocks: Mapping[str, BraidWord], ctx: MixedContext
) -> None:
    if set(blocks) != set(p.generators):
        raise ValueError(f"blocks must be given on exactly {p.generators}")
    for word in blocks.values():
        if not in_bnn(word, ctx):
            raise NotInBnnError(ctx.n, permutation_of(word))


def delta_normalized_relator(
    p: SurfacePresentation, blocks: Mapping[str, BraidWord], n: int
) -> BraidWord:
    """
    The relator image of ``lift_from_blocks(p, blocks, n)``, rewritten with Δ = Δ_{2n}.

    With α = δ, β = v (kind II) or β = 1 (kind III), and i = θ:

        b_α (Δ b_β Δ⁻¹) Δ² (Δ^{i(β)−1} b_α Δ^{1−i(β)}) b_β⁻¹
        · ∏ b_{2k−1} (Δ^{i(a_2k−1)} b_{2k} Δ^{−i(a_2k−1)}) (Δ^{i(a_2k)} b_{2k−1} Δ^{−i(a_2k)})⁻¹ b_{2k}⁻¹

    Every factor except Δ² is a block-preserving braid or a Δ-conjugate of one, so
    epsilon of the result is ``n² mod 2`` plus terms that cancel in pairs. The word is
    equal in the group to the evaluated relator.

    Raises:
        HypothesisNotMetError: If the presentation is orientable or θ(δ) ≠ 1.
        NotInBnnError: If some ``b_g`` does not preserve the blocks.
    """
    _require_delta_nontrivial(p, "delta-normalized relator")
    ctx = MixedContext(n=n)
    _check_blocks(p, blocks, ctx)
    m = ctx.strands
    d = delta(m)

    def conj(k: int, word: BraidWord) -> BraidWord:
        return concat(power(d, k), word, power(d, -k))

    alpha = blocks[p.delta_generator or ""]
    if p.kind is SurfaceKind.NON_ORIENTABLE_EVEN:
        beta, i_beta = blocks["v"], p.theta["v"]
    else:
        beta, i_beta = BraidWord.identity(m), 0

    parts = [
        alpha,
        conj(1, beta),
        power(d, 2),
        conj(i_beta - 1, alpha),
        inverse(beta),
    ]
    for k in range(1, p.m + 1):
        x, y = f"a{2 * k - 1}", f"a{2 * k}"
        parts += [
            blocks[x],
            conj(p.theta[x], blocks[y]),
            inverse(conj(p.theta[y], blocks[x])),
            inverse(blocks[y]),
        ]
    return concat(*parts)
