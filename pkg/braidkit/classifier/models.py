"""
Pydantic models for the Borsuk–Ulam classifier.
"""

from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from braidkit.surfaces.models import SurfacePresentation


class DomainKind(StrEnum):
    """The domain X with its free involution τ."""

    SPHERE = "sphere"
    """The 2-sphere with the antipodal map."""

    SURFACE = "surface"
    """A closed surface other than the sphere, given by the presentation of X/τ and θ."""


class TargetKind(StrEnum):
    PLANE = "plane"
    SPHERE = "sphere"
    PROJECTIVE_PLANE = "rp2"
    ORIENTABLE_CLOSED = "or"
    NON_ORIENTABLE_CLOSED = "nonor"


class Status(StrEnum):
    """
    Status of one Borsuk–Ulam property.

    ``NOT_APPLICABLE`` is used for the non-split property when n = 1: every 1-valued
    map is split.
    """

    HAS = "has"
    DOES_NOT_HAVE = "does_not_have"
    UNKNOWN = "unknown"
    NOT_APPLICABLE = "not_applicable"


class TargetSurface(BaseModel):
    """
    The target Y.

    ``genus`` is used only for the closed families: orientable genus g ≥ 1 for ``or``
    and non-orientable genus g ≥ 2 for ``nonor`` (the sphere and the projective plane
    have their own kinds).
    """

    model_config = ConfigDict(frozen=True)

    kind: TargetKind
    genus: int | None = Field(default=None, description="Genus of a closed target family.")

    @property
    def is_closed(self) -> bool:
        return self.kind is not TargetKind.PLANE

    @property
    def is_orientable(self) -> bool:
        return self.kind in (TargetKind.PLANE, TargetKind.SPHERE, TargetKind.ORIENTABLE_CLOSED)

    def describe(self) -> str:
        if self.kind is TargetKind.ORIENTABLE_CLOSED:
            return f"or:{self.genus}"
        if self.kind is TargetKind.NON_ORIENTABLE_CLOSED:
            return f"nonor:{self.genus}"
        return self.kind.value


class TripleDescriptor(BaseModel):
    """
    A triple (X, τ; Y) together with the number of values n.

    The orbit-space presentation is required for the surface domain and must be
    absent for the sphere domain. Semantic validity is checked by ``classify``.
    """

    model_config = ConfigDict(frozen=True)

    domain: DomainKind
    orbit_space: SurfacePresentation | None = None
    target: TargetSurface
    n: int = Field(description="Number of values of the multimap.")


class BupVerdict(BaseModel):
    """
    Split and non-split Borsuk–Ulam status of a triple, with the rule behind each.

    Every status other than ``UNKNOWN`` carries a provenance string.
    """

    model_config = ConfigDict(frozen=True)

    split: Status
    nonsplit: Status
    split_provenance: str = ""
    nonsplit_provenance: str = ""

    @model_validator(mode="after")
    def _provenance_present(self) -> BupVerdict:
        if self.split is not Status.UNKNOWN and not self.split_provenance:
            raise ValueError("a decided split verdict needs a provenance")
        if self.nonsplit is not Status.UNKNOWN and not self.nonsplit_provenance:
            raise ValueError("a decided non-split verdict needs a provenance")
        return self

    @property
    def has_bup(self) -> bool:
        """The n-BUP holds: both the split and the non-split property hold."""
        return self.split is Status.HAS and self.nonsplit in (Status.HAS, Status.NOT_APPLICABLE)


class WitnessCheck(BaseModel):
    """One constructive check run by ``cross_validate``."""

    model_config = ConfigDict(frozen=True)

    name: str
    expected: str
    observed: str
    passed: bool


class CrossValidationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    descriptor: TripleDescriptor
    verdict: BupVerdict
    checks: tuple[WitnessCheck, ...] = ()

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
