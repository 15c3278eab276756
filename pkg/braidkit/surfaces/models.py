"""
Pydantic models for surface-group presentations and homomorphisms into B²_{n,n}.

Words in the generators of a presentation are tuples of ``(generator, ±1)`` pairs.
"""

from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from braidkit.braids.models import BraidWord

GroupWord = tuple[tuple[str, int], ...]


class SurfaceKind(StrEnum):
    """
    Shape of the one-relator presentation of the orbit space.

    ``ORIENTABLE``: ⟨a_1..a_2m | [a_1,a_2]⋯[a_2m−1,a_2m]⟩, m ≥ 1.
    ``NON_ORIENTABLE_EVEN``: ⟨u, v, a_1..a_2m | u v u v⁻¹ [a_1,a_2]⋯⟩, m ≥ 0.
    ``NON_ORIENTABLE_ODD``: ⟨c, a_1..a_2m | c² [a_1,a_2]⋯⟩, m ≥ 0 (m = 0 is RP²).
    """

    ORIENTABLE = "I"
    NON_ORIENTABLE_EVEN = "II"
    NON_ORIENTABLE_ODD = "III"


_MIN_M: dict[SurfaceKind, int] = {
    SurfaceKind.ORIENTABLE: 1,
    SurfaceKind.NON_ORIENTABLE_EVEN: 0,
    SurfaceKind.NON_ORIENTABLE_ODD: 0,
}


def surface_generators(kind: SurfaceKind, m: int) -> list[str]:
    """Generator names of the presentation of the given kind and parameter."""
    handles = [f"a{k}" for k in range(1, 2 * m + 1)]
    if kind is SurfaceKind.NON_ORIENTABLE_EVEN:
        return ["u", "v", *handles]
    if kind is SurfaceKind.NON_ORIENTABLE_ODD:
        return ["c", *handles]
    return handles


class SurfacePresentation(BaseModel):
    """
    A closed surface X_τ given by its one-relator presentation, together with the
    Z₂-valued ``theta`` that classifies a double covering X → X_τ.

    ``theta`` must be defined on exactly the generators and vanish on the relator. It
    may be non-surjective here; operations that need a double covering reject that.

    Example:
        >>> p = SurfacePresentation(kind="II", m=0, theta={"u": 1, "v": 0})
        >>> p.generators   # ['u', 'v']
        >>> p.genus        # 2 (the Klein bottle)
    """

    model_config = ConfigDict(frozen=True)

    kind: SurfaceKind
    m: int = Field(ge=0, description="Number of commutator pairs in the relator.")
    theta: dict[str, int] = Field(description="Value of θ (0 or 1) on each generator.")

    @model_validator(mode="after")
    def _theta_is_homomorphism(self) -> SurfacePresentation:
        if self.m < _MIN_M[self.kind]:
            raise ValueError(f"kind {self.kind.value} needs m >= {_MIN_M[self.kind]}")
        expected = surface_generators(self.kind, self.m)
        if set(self.theta) != set(expected):
            raise ValueError(f"theta must be given on exactly {expected}, got {sorted(self.theta)}")
        bad = {g: v for g, v in self.theta.items() if v not in (0, 1)}
        if bad:
            raise ValueError(f"theta values must be 0 or 1, got {bad}")
        if sum(self.theta[g] * e for g, e in self.relator) % 2:
            raise ValueError("theta does not vanish on the relator")
        return self

    @property
    def generators(self) -> list[str]:
        return surface_generators(self.kind, self.m)

    @property
    def relator(self) -> GroupWord:
        handles: list[tuple[str, int]] = []
        for k in range(1, self.m + 1):
            x, y = f"a{2 * k - 1}", f"a{2 * k}"
            handles += [(x, 1), (y, 1), (x, -1), (y, -1)]
        if self.kind is SurfaceKind.NON_ORIENTABLE_EVEN:
            return (("u", 1), ("v", 1), ("u", 1), ("v", -1), *handles)
        if self.kind is SurfaceKind.NON_ORIENTABLE_ODD:
            return (("c", 1), ("c", 1), *handles)
        return tuple(handles)

    @property
    def delta_generator(self) -> str | None:
        """The generator playing the rôle of δ, or None when δ = 1."""
        return {
            SurfaceKind.ORIENTABLE: None,
            SurfaceKind.NON_ORIENTABLE_EVEN: "u",
            SurfaceKind.NON_ORIENTABLE_ODD: "c",
        }[self.kind]

    @property
    def is_orientable(self) -> bool:
        return self.kind is SurfaceKind.ORIENTABLE

    @property
    def genus(self) -> int:
        """Orientable genus m for kind I; non-orientable genus 2m+2 or 2m+1 otherwise."""
        if self.kind is SurfaceKind.NON_ORIENTABLE_EVEN:
            return 2 * self.m + 2
        if self.kind is SurfaceKind.NON_ORIENTABLE_ODD:
            return 2 * self.m + 1
        return self.m

    @property
    def is_surjective(self) -> bool:
        return any(self.theta.values())

    def describe(self) -> str:
        if self.kind is SurfaceKind.ORIENTABLE:
            return "torus" if self.m == 1 else f"orientable surface of genus {self.m}"
        if self.genus == 1:
            return "projective plane"
        if self.genus == 2:
            return "Klein bottle"
        return f"non-orientable surface of genus {self.genus}"


class GroupHom(BaseModel):
    """
    A homomorphism from the fundamental group of a presentation into B_{2n}, given
    by generator images on 2n strands.
    """

    model_config = ConfigDict(frozen=True)

    source: SurfacePresentation
    n: int = Field(ge=1, description="Block size; images live on 2n strands.")
    images: dict[str, BraidWord]

    @model_validator(mode="after")
    def _images_cover_generators(self) -> GroupHom:
        if set(self.images) != set(self.source.generators):
            raise ValueError(
                f"images must be given on exactly {self.source.generators}, "
                f"got {sorted(self.images)}"
            )
        for g, word in self.images.items():
            if word.strands != 2 * self.n:
                raise ValueError(
                    f"image of {g} lives on {word.strands} strands, expected {2 * self.n}"
                )
        return self


class HomReport(BaseModel):
    """
    The three independent facts checked by ``verify_hom``.

    ``well_defined`` and ``commutes`` together make the homomorphism a valid lift of θ;
    ``kernel_in_pure`` then tells the split type (true) from the non-split type (false).
    """

    model_config = ConfigDict(frozen=True)

    well_defined: bool = Field(description="The relator maps to the trivial braid.")
    commutes: bool = Field(description="pi_sign of every generator image equals θ.")
    kernel_in_pure: bool = Field(description="Every Schreier kernel generator maps to a pure braid.")
    relator_image_length: int = Field(ge=0, description="Length of the reduced relator image.")
    kernel_generators: int = Field(ge=0, description="Number of Schreier generators checked.")

    def as_tuple(self) -> tuple[bool, bool, bool]:
        return (self.well_defined, self.commutes, self.kernel_in_pure)

    @property
    def multimap_type(self) -> str | None:
        """``"split"`` or ``"non-split"`` for a valid lift, otherwise None."""
        if not (self.well_defined and self.commutes):
            return None
        return "split" if self.kernel_in_pure else "non-split"
