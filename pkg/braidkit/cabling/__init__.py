"""
braidkit.cabling — k-cabling of braid words.

Public API::

    from braidkit.cabling import (
        cable, inflate_permutation, check_cabling_diagram, cabled_permutation_matches,
    )
"""

from braidkit.cabling.cable import (
    cable,
    cabled_permutation_matches,
    check_cabling_diagram,
    inflate_permutation,
)

__all__ = [
    "cable",
    "inflate_permutation",
    "check_cabling_diagram",
    "cabled_permutation_matches",
]
