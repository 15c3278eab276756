"""
The defining Artin relations of B_m as ``Relation`` records.
"""

from braidkit.braids.models import BraidWord, Relation, RelationFamily


def artin_relations(m: int, indices: range | None = None) -> list[Relation]:
    """
    Return the Artin relations of B_m among the generators listed in ``indices``.

    Braid relations ``σ_iσ_{i+1}σ_i = σ_{i+1}σ_iσ_{i+1}`` are emitted when both ``i`` and
    ``i+1`` are in ``indices``; commuting relations ``σ_iσ_j = σ_jσ_i`` for every pair with
    ``|i − j| >= 2``.

    Args:
        m: Strand count.
        indices: Generator indices to use. Defaults to ``1..m-1``.
    """
    allowed = list(indices) if indices is not None else list(range(1, m))
    allowed_set = set(allowed)
    relations: list[Relation] = []
    for i in allowed:
        if i + 1 in allowed_set:
            relations.append(
                Relation(
                    family=RelationFamily.ARTIN,
                    label=f"s{i} s{i + 1} s{i} = s{i + 1} s{i} s{i + 1}",
                    lhs=BraidWord(strands=m, letters=(i, i + 1, i)),
                    rhs=BraidWord(strands=m, letters=(i + 1, i, i + 1)),
                )
            )
    for i in allowed:
        for j in allowed:
            if j >= i + 2:
                relations.append(
                    Relation(
                        family=RelationFamily.ARTIN,
                        label=f"s{i} s{j} = s{j} s{i}",
                        lhs=BraidWord(strands=m, letters=(i, j)),
                        rhs=BraidWord(strands=m, letters=(j, i)),
                    )
                )
    return relations
