"""
The presentation of B_{n,n}: generators σ_k (k ≠ n) and A_{i,j} (1 ≤ i < j ≤ 2n), with
four families of relations (pure braid, Artin, squares, conjugates).

The relation corpus doubles as the regression corpus for the word-problem engine and
as the well-definedness check of ``epsilon``.
"""

import random

from braidkit.braids.models import BraidWord, Relation, RelationFamily
from braidkit.braids.relations import artin_relations
from braidkit.braids.words import a_gen, concat, delta, inverse
from braidkit.mixed.models import MixedContext


def _label_a(i: int, j: int) -> str:
    return f"A{i},{j}"


def bnn_generators(ctx: MixedContext) -> dict[str, BraidWord]:
    """
    Generators of B_{n,n} keyed by label (``"s1"``, ``"A1,3"``).

    Order: the σ_k with k ≠ n, then A_{i,j} by increasing j, then i.
    """
    m = ctx.strands
    gens: dict[str, BraidWord] = {}
    for k in range(1, m):
        if k != ctx.n:
            gens[f"s{k}"] = BraidWord(strands=m, letters=(k,))
    for j in range(2, m + 1):
        for i in range(1, j):
            gens[_label_a(i, j)] = a_gen(i, j, m)
    return gens


def epsilon_table(ctx: MixedContext) -> dict[str, int]:
    """
    Generator values of ε: σ_k ↦ 0, A_{i,j} ↦ 1 when i and j lie in different blocks,
    otherwise 0.
    """
    table: dict[str, int] = {}
    for label in bnn_generators(ctx):
        if label.startswith("s"):
            table[label] = 0
        else:
            i, j = (int(x) for x in label[1:].split(","))
            table[label] = 1 if ctx.block_of(i) != ctx.block_of(j) else 0
    return table


def _pure_braid_rhs(r: int, s: int, i: int, j: int, m: int) -> tuple[BraidWord, ...] | None:
    """Right-hand side of ``A_{r,s}⁻¹ A_{i,j} A_{r,s}``, or None when no rule applies."""

    def A(x: int, y: int) -> BraidWord:
        return a_gen(x, y, m)

    def Ai(x: int, y: int) -> BraidWord:
        return inverse(a_gen(x, y, m))

    if i < r < s < j or r < s < i < j:
        return (A(i, j),)
    if r < i == s < j:
        return (A(r, j), A(i, j), Ai(r, j))
    if i == r < s < j:
        return (A(r, j), A(s, j), A(i, j), Ai(s, j), Ai(r, j))
    if r < i < s < j:
        return (
            A(r, j), A(s, j), Ai(r, j), Ai(s, j),
            A(i, j),
            A(s, j), A(r, j), Ai(s, j), Ai(r, j),
        )  # fmt: skip
    return None


def _conjugate_rhs(k: int, i: int, j: int, m: int) -> tuple[BraidWord, ...]:
    """Right-hand side of ``σ_k A_{i,j} σ_k⁻¹``."""
    if k not in (i - 1, i, j - 1, j) or (k == i and j == k + 1):
        return (a_gen(i, j, m),)
    if k == j:
        return (a_gen(i, k + 1, m),)
    if j == k + 1 and i < k:
        return (inverse(a_gen(i, k + 1, m)), a_gen(i, k, m), a_gen(i, k + 1, m))
    if i == k and k < j - 1:
        return (a_gen(i + 1, j, m),)
    # i == k + 1
    return (inverse(a_gen(k + 1, j, m)), a_gen(k, j, m), a_gen(k + 1, j, m))


def bnn_relations(ctx: MixedContext) -> list[Relation]:
    """
    All defining relations of B_{n,n} as literal words on 2n strands.

    Families:
        pure braid: ``A_{r,s}⁻¹ A_{i,j} A_{r,s}`` rewritten for the four index patterns;
        artin: braid and commuting relations among σ_k with k ≠ n;
        square: ``σ_i² = A_{i,i+1}`` for i ≠ n;
        conjugate: ``σ_k A_{i,j} σ_k⁻¹`` for k ≠ n and every i < j.
    """
    m = ctx.strands
    n = ctx.n
    relations: list[Relation] = []
    pairs = [(i, j) for j in range(2, m + 1) for i in range(1, j)]

    for r, s in pairs:
        for i, j in pairs:
            rhs = _pure_braid_rhs(r, s, i, j, m)
            if rhs is None:
                continue
            relations.append(
                Relation(
                    family=RelationFamily.PURE_BRAID,
                    label=f"A{r},{s}^-1 A{i},{j} A{r},{s}",
                    lhs=concat(inverse(a_gen(r, s, m)), a_gen(i, j, m), a_gen(r, s, m)),
                    rhs=concat(*rhs),
                )
            )

    block_indices = [k for k in range(1, m) if k != n]
    relations.extend(artin_relations(m, indices=range(1, n)))
    relations.extend(artin_relations(m, indices=range(n + 1, m)))
    for a in range(1, n):
        for b in range(n + 1, m):
            if abs(a - b) >= 2:
                relations.append(
                    Relation(
                        family=RelationFamily.ARTIN,
                        label=f"s{a} s{b} = s{b} s{a}",
                        lhs=BraidWord(strands=m, letters=(a, b)),
                        rhs=BraidWord(strands=m, letters=(b, a)),
                    )
                )

    for k in block_indices:
        relations.append(
            Relation(
                family=RelationFamily.SQUARE,
                label=f"s{k}^2 = A{k},{k + 1}",
                lhs=BraidWord(strands=m, letters=(k, k)),
                rhs=a_gen(k, k + 1, m),
            )
        )

    for k in block_indices:
        sigma = BraidWord(strands=m, letters=(k,))
        for i, j in pairs:
            relations.append(
                Relation(
                    family=RelationFamily.CONJUGATE,
                    label=f"s{k} A{i},{j} s{k}^-1",
                    lhs=concat(sigma, a_gen(i, j, m), inverse(sigma)),
                    rhs=concat(*_conjugate_rhs(k, i, j, m)),
                )
            )
    return relations


def random_block_word(rng: random.Random, ctx: MixedContext, length: int) -> BraidWord:
    """
    A block-preserving word built from ``length`` random B_{n,n} generators or their
    inverses.
    """
    gens = list(bnn_generators(ctx).values())
    parts = [BraidWord.identity(ctx.strands)]
    for _ in range(length):
        g = rng.choice(gens)
        parts.append(g if rng.random() < 0.5 else inverse(g))
    return concat(*parts)


def random_b2nn_word(rng: random.Random, ctx: MixedContext, length: int) -> BraidWord:
    """
    A random element of B²_{n,n}: a block word, followed by Δ_{2n} half of the time.
    Every element of the non-trivial coset is Δ_{2n} times a block-preserving braid.
    """
    word = random_block_word(rng, ctx, length)
    if rng.random() < 0.5:
        word = concat(word, delta(ctx.strands))
    return word
