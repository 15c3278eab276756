"""
braidkit.surfaces — surface-group presentations and lifts of θ into B²_{n,n}.

Public API::

    from braidkit.surfaces import (
        SurfaceKind, SurfacePresentation, GroupHom, HomReport, GroupWord,
        orientable, non_orientable_even, non_orientable_odd, enumerate_presentations,
        theta_hat_delta, delta_word, theta_of, schreier_kernel_generators, format_group_word,
        evaluate, verify_hom,
        witness_split, witness_nonsplit, witness_four_strand, witness_even_n,
        lift_from_blocks, delta_normalized_relator,
        ThetaNotSurjectiveError, HypothesisNotMetError, ImageNotInB2nnError,
    )

Example::

    from braidkit.surfaces import non_orientable_even, verify_hom, witness_four_strand

    klein = non_orientable_even(0, {"u": 1, "v": 0})
    report = verify_hom(witness_four_strand(klein))
    report.as_tuple()  # (True, True, False)
"""

from braidkit.surfaces.exceptions import (
    HypothesisNotMetError,
    ImageNotInB2nnError,
    ThetaNotSurjectiveError,
)
from braidkit.surfaces.models import (
    GroupHom,
    GroupWord,
    HomReport,
    SurfaceKind,
    SurfacePresentation,
)
from braidkit.surfaces.presentations import (
    delta_word,
    enumerate_presentations,
    format_group_word,
    non_orientable_even,
    non_orientable_odd,
    orientable,
    schreier_kernel_generators,
    theta_hat_delta,
    theta_of,
)
from braidkit.surfaces.verification import evaluate, verify_hom
from braidkit.surfaces.witnesses import (
    delta_normalized_relator,
    lift_from_blocks,
    witness_even_n,
    witness_four_strand,
    witness_nonsplit,
    witness_split,
)

__all__ = [
    "SurfaceKind",
    "SurfacePresentation",
    "GroupHom",
    "HomReport",
    "GroupWord",
    "orientable",
    "non_orientable_even",
    "non_orientable_odd",
    "enumerate_presentations",
    "theta_hat_delta",
    "delta_word",
    "theta_of",
    "schreier_kernel_generators",
    "format_group_word",
    "evaluate",
    "verify_hom",
    "witness_split",
    "witness_nonsplit",
    "witness_four_strand",
    "witness_even_n",
    "lift_from_blocks",
    "delta_normalized_relator",
    "ThetaNotSurjectiveError",
    "HypothesisNotMetError",
    "ImageNotInB2nnError",
]
