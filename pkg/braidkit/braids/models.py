"""
Pydantic models for the braidkit braid-word layer.

A letter is a signed non-zero integer: ``+i`` is the Artin generator σ_i and ``-i`` its
inverse. Words are read left to right. Permutations send the starting position of a
strand to its ending position, and ``p * q`` means "p, then q".
"""

from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class BraidWord(BaseModel):
    """
    A finite word in the Artin generators on a declared number of strands.

    Words are stored literally: construction never cancels letters. Use
    ``free_reduce()`` for the reduced representative.

    Example:
        >>> w = BraidWord(strands=3, letters=(1, -2))
        >>> str(w)  # "s1 s2^-1"
    """

    model_config = ConfigDict(frozen=True)

    strands: int = Field(ge=1, description="Number of strands m of the braid group B_m.")
    letters: tuple[int, ...] = Field(
        default=(),
        description="Signed generator indices: +i for σ_i, -i for σ_i^-1, each 1 <= |i| <= m-1.",
    )

    @model_validator(mode="after")
    def _letters_fit_strands(self) -> BraidWord:
        limit = self.strands - 1
        for letter in self.letters:
            if letter == 0 or abs(letter) > limit:
                raise ValueError(
                    f"letter {letter} is not a generator of B_{self.strands} "
                    f"(indices must lie in 1..{limit})"
                )
        return self

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        """Return the empty word on ``strands`` strands."""
        return cls(strands=strands)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"s{x}" if x > 0 else f"s{-x}^-1" for x in self.letters)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    @property
    def is_positive(self) -> bool:
        """True when every letter is a positive generator."""
        return all(x > 0 for x in self.letters)


class Permutation(BaseModel):
    """
    A bijection of {1..m}, stored as its one-line images.

    ``images[p - 1]`` is the ending position of the strand that starts at position ``p``.
    The product is left-to-right: ``(p * q)(x) == q(p(x))``.
    """

    model_config = ConfigDict(frozen=True)

    images: tuple[int, ...] = Field(
        min_length=1, description="One-line notation; images[p-1] is the image of p."
    )

    @field_validator("images")
    @classmethod
    def _is_bijection(cls, v: tuple[int, ...]) -> tuple[int, ...]:
        if sorted(v) != list(range(1, len(v) + 1)):
            raise ValueError(f"{v} is not a permutation of 1..{len(v)}")
        return v

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(images=tuple(range(1, size + 1)))

    @classmethod
    def transposition(cls, size: int, i: int, j: int) -> Permutation:
        """Return the permutation exchanging ``i`` and ``j``."""
        images = list(range(1, size + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images=tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    @property
    def is_identity(self) -> bool:
        return all(image == p for p, image in enumerate(self.images, start=1))

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if other.size != self.size:
            raise ValueError(f"cannot multiply permutations of {self.size} and {other.size}")
        return Permutation(images=tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for p, image in enumerate(self.images, start=1):
            inv[image - 1] = p
        return Permutation(images=tuple(inv))

    def inversions(self) -> int:
        """Number of pairs p < q with images p > q (the length of a permutation braid)."""
        imgs = self.images
        return sum(
            1 for a in range(len(imgs)) for b in range(a + 1, len(imgs)) if imgs[a] > imgs[b]
        )

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles of length at least two, each starting at its smallest point."""
        seen: set[int] = set()
        result: list[tuple[int, ...]] = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def one_line(self) -> str:
        return " ".join(str(x) for x in self.images)


class RelationFamily(StrEnum):
    """Family a defining relation belongs to."""

    ARTIN = "artin"
    PURE_BRAID = "pure_braid"
    SQUARE = "square"
    CONJUGATE = "conjugate"


class Relation(BaseModel):
    """
    A labelled relation ``lhs = rhs`` between two literal braid words.

    Both sides are stored exactly as written, without free reduction, so relation
    corpora exercise the word-problem engine on unreduced input.
    """

    model_config = ConfigDict(frozen=True)

    family: RelationFamily = Field(description="Family the relation belongs to.")
    label: str = Field(min_length=1, description="Short human-readable name.")
    lhs: BraidWord
    rhs: BraidWord

    @model_validator(mode="after")
    def _same_strands(self) -> Relation:
        if self.lhs.strands != self.rhs.strands:
            raise ValueError(
                f"relation {self.label!r} mixes {self.lhs.strands} and {self.rhs.strands} strands"
            )
        return self
