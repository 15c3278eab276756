"""
braidkit.garside — word problem for B_m via the left-greedy normal form.

Public API::

    from braidkit.garside import (
        normal_form, are_equal, is_trivial, canonical_length, to_word,
        NormalForm, SimpleBraid,
    )

``normal_form`` is the equality certificate used by every other subpackage.
"""

from braidkit.garside.models import NormalForm, SimpleBraid
from braidkit.garside.normal_form import (
    are_equal,
    canonical_length,
    is_trivial,
    normal_form,
    to_word,
)

__all__ = [
    "normal_form",
    "are_equal",
    "is_trivial",
    "canonical_length",
    "to_word",
    "NormalForm",
    "SimpleBraid",
]
