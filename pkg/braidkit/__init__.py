"""
braidkit - braid groups, mixed braid groups and the Borsuk–Ulam property of n-valued maps

Braid words with a Garside word-problem engine, the subgroups B_{n,n} ⊂ B²_{n,n} of
B_{2n} with their block sign and ε invariant, cabling, homomorphisms from surface groups
into B²_{n,n}, and a decision table for the split and non-split Borsuk–Ulam properties.

Quick Start:
    >>> from braidkit import parse_braid, are_equal, delta, concat, inverse
    >>> omega = parse_braid("s2 s3 s1^-1 s2^-1", 4)
    >>> are_equal(concat(delta(4), omega, inverse(delta(4))), inverse(omega))
    True
"""

__version__ = "0.1.0"
__license__ = "MIT"

from braidkit.braids import (
    BraidWord,
    GeneratorIndexError,
    Permutation,
    StrandMismatchError,
    a_gen,
    big_omega,
    compose,
    concat,
    delta,
    full_twist,
    inverse,
    is_pure,
    omega,
    permutation_of,
)
from braidkit.cabling import cable
from braidkit.classifier import (
    BupVerdict,
    Status,
    TargetSurface,
    TripleDescriptor,
    classify,
    cross_validate,
)
from braidkit.expr import BraidSyntaxError, ExpressionTooLargeError, parse_braid, print_braid
from braidkit.garside import NormalForm, are_equal, is_trivial, normal_form
from braidkit.helpers import BraidkitError
from braidkit.mixed import MixedContext, epsilon, in_bnn, in_bnn2, pi_sign
from braidkit.surfaces import (
    GroupHom,
    SurfacePresentation,
    verify_hom,
    witness_four_strand,
    witness_nonsplit,
    witness_split,
)
from braidkit.verification import SuiteConfig, run_paper_suite

__all__ = [
    "__version__",
    "__license__",
    # Braid words
    "BraidWord",
    "Permutation",
    "a_gen",
    "big_omega",
    "compose",
    "concat",
    "delta",
    "full_twist",
    "inverse",
    "is_pure",
    "omega",
    "permutation_of",
    "parse_braid",
    "print_braid",
    # Word problem
    "NormalForm",
    "normal_form",
    "are_equal",
    "is_trivial",
    # Mixed braid groups and cabling
    "MixedContext",
    "in_bnn",
    "in_bnn2",
    "pi_sign",
    "epsilon",
    "cable",
    # Surface groups
    "SurfacePresentation",
    "GroupHom",
    "verify_hom",
    "witness_split",
    "witness_nonsplit",
    "witness_four_strand",
    # Classifier and suite
    "TripleDescriptor",
    "TargetSurface",
    "BupVerdict",
    "Status",
    "classify",
    "cross_validate",
    "SuiteConfig",
    "run_paper_suite",
    # Errors
    "BraidkitError",
    "BraidSyntaxError",
    "ExpressionTooLargeError",
    "GeneratorIndexError",
    "StrandMismatchError",
]
