"""
braidkit.mixed — the mixed braid groups B_{n,n} ⊂ B²_{n,n} ⊂ B_{2n}.

Public API::

    from braidkit.mixed import (
        MixedContext,
        in_bnn, in_bnn2, pi_sign, epsilon,
        bnn_generators, bnn_relations, epsilon_table,
        random_block_word, random_b2nn_word,
        NotInBnnError, NotInB2nnError, EpsilonParityError,
    )

Block 1 is {1..n} and block 2 is {n+1..2n}. ``pi_sign`` detects a block swap and
``epsilon`` is the mod-2 half count of cross-block crossings.
"""

from braidkit.mixed.exceptions import EpsilonParityError, NotInB2nnError, NotInBnnError
from braidkit.mixed.models import MixedContext
from braidkit.mixed.presentation import (
    bnn_generators,
    bnn_relations,
    epsilon_table,
    random_b2nn_word,
    random_block_word,
)
from braidkit.mixed.subgroups import epsilon, in_bnn, in_bnn2, pi_sign

__all__ = [
    "MixedContext",
    "in_bnn",
    "in_bnn2",
    "pi_sign",
    "epsilon",
    "bnn_generators",
    "bnn_relations",
    "epsilon_table",
    "random_block_word",
    "random_b2nn_word",
    "NotInBnnError",
    "NotInB2nnError",
    "EpsilonParityError",
]
