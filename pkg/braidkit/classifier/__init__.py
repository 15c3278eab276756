"""
braidkit.classifier — Borsuk–Ulam property of n-valued maps as a decision table.

Public API::

    from braidkit.classifier import (
        classify, cross_validate, validate_descriptor, parse_target,
        TripleDescriptor, TargetSurface, DomainKind, TargetKind, Status, BupVerdict,
        CrossValidationReport, WitnessCheck,
        InvalidDescriptorError, WitnessFailureError,
    )
"""

from braidkit.classifier.cross_validate import cross_validate
from braidkit.classifier.exceptions import InvalidDescriptorError, WitnessFailureError
from braidkit.classifier.models import (
    BupVerdict,
    CrossValidationReport,
    DomainKind,
    Status,
    TargetKind,
    TargetSurface,
    TripleDescriptor,
    WitnessCheck,
)
from braidkit.classifier.rules import classify, parse_target, validate_descriptor

__all__ = [
    "classify",
    "cross_validate",
    "validate_descriptor",
    "parse_target",
    "TripleDescriptor",
    "TargetSurface",
    "DomainKind",
    "TargetKind",
    "Status",
    "BupVerdict",
    "CrossValidationReport",
    "WitnessCheck",
    "InvalidDescriptorError",
    "WitnessFailureError",
]
