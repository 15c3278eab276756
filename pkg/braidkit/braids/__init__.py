"""
braidkit.braids — braid words on m strands and the permutation homomorphism.

Public API::

    from braidkit.braids import (
        BraidWord, Permutation, Relation, RelationFamily,
        free_reduce, compose, inverse, concat, product, power, conjugate, commutator,
        generator, reindex, flip, permutation_of, is_pure,
        a_gen, a_gen_cross, delta, full_twist, omega, big_omega,
        artin_relations, random_word,
        StrandMismatchError, GeneratorIndexError,
    )

Letters are signed 1-based generator indices and words read left to right.
"""

from braidkit.braids.exceptions import GeneratorIndexError, StrandMismatchError
from braidkit.braids.models import BraidWord, Permutation, Relation, RelationFamily
from braidkit.braids.relations import artin_relations
from braidkit.braids.words import (
    a_gen,
    a_gen_cross,
    big_omega,
    commutator,
    compose,
    concat,
    conjugate,
    delta,
    flip,
    free_reduce,
    full_twist,
    generator,
    inverse,
    is_pure,
    omega,
    permutation_of,
    power,
    product,
    random_word,
    reindex,
)

__all__ = [
    "BraidWord",
    "Permutation",
    "Relation",
    "RelationFamily",
    "free_reduce",
    "compose",
    "inverse",
    "concat",
    "product",
    "power",
    "conjugate",
    "commutator",
    "generator",
    "reindex",
    "flip",
    "permutation_of",
    "is_pure",
    "a_gen",
    "a_gen_cross",
    "delta",
    "full_twist",
    "omega",
    "big_omega",
    "artin_relations",
    "random_word",
    "StrandMismatchError",
    "GeneratorIndexError",
]
