"""
Pydantic models for the Garside normal form.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from braidkit.braids.models import BraidWord, Permutation
from braidkit.braids.words import delta, power


class SimpleBraid(BaseModel):
    """
    A permutation braid: the positive braid in which every pair of strands crosses at
    most once, determined by its permutation.

    The identity permutation is the empty braid and the reversal is Δ_m.
    """

    model_config = ConfigDict(frozen=True)

    permutation: Permutation

    @property
    def strands(self) -> int:
        return self.permutation.size

    @property
    def length(self) -> int:
        """Word length, equal to the inversion count of the permutation."""
        return self.permutation.inversions()

    @property
    def is_identity(self) -> bool:
        return self.permutation.is_identity

    @property
    def is_delta(self) -> bool:
        m = self.strands
        return self.permutation.images == tuple(range(m, 0, -1))

    def starting_set(self) -> frozenset[int]:
        """Indices i such that the braid can be written starting with σ_i."""
        imgs = self.permutation.images
        return frozenset(i for i in range(1, self.strands) if imgs[i - 1] > imgs[i])

    def finishing_set(self) -> frozenset[int]:
        """Indices i such that the braid can be written ending with σ_i."""
        inv = self.permutation.inverse().images
        return frozenset(i for i in range(1, self.strands) if inv[i - 1] > inv[i])

    def word(self) -> BraidWord:
        """
        A positive word for the braid.

        Bubble-sorts the target positions; each swap is one crossing, so the word
        length equals the inversion count.
        """
        targets = list(self.permutation.images)
        letters: list[int] = []
        swapped = True
        while swapped:
            swapped = False
            for p in range(len(targets) - 1):
                if targets[p] > targets[p + 1]:
                    targets[p], targets[p + 1] = targets[p + 1], targets[p]
                    letters.append(p + 1)
                    swapped = True
        return BraidWord(strands=self.strands, letters=tuple(letters))


class NormalForm(BaseModel):
    """
    Left-greedy normal form ``Δ^inf · x_1 ⋯ x_r``.

    Every factor is a simple braid other than the identity and Δ_m, and each consecutive
    pair ``(x_k, x_{k+1})`` is left-weighted: the starting set of ``x_{k+1}`` lies inside
    the finishing set of ``x_k``. Two words represent the same braid iff their normal
    forms are equal.
    """

    model_config = ConfigDict(frozen=True)

    strands: int = Field(ge=1)
    inf: int = Field(description="Exponent of Δ_m.")
    factors: tuple[SimpleBraid, ...] = Field(default=())

    @model_validator(mode="after")
    def _left_weighted(self) -> NormalForm:
        for factor in self.factors:
            if factor.strands != self.strands:
                raise ValueError("normal form factors must live on the declared strand count")
            if factor.is_identity or factor.is_delta:
                raise ValueError("normal form factors must be proper simple braids")
        for left, right in zip(self.factors, self.factors[1:], strict=False):
            if not right.starting_set() <= left.finishing_set():
                raise ValueError("consecutive factors are not left-weighted")
        return self

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def is_trivial(self) -> bool:
        return self.inf == 0 and not self.factors

    def to_word(self) -> BraidWord:
        """The normal form re-expanded as a braid word: Δ power, then factor words."""
        delta_power = power(delta(self.strands), self.inf)
        letters = delta_power.letters + tuple(
            x for factor in self.factors for x in factor.word().letters
        )
        return BraidWord(strands=self.strands, letters=letters)

    def __str__(self) -> str:
        if not self.factors:
            return f"D^{self.inf}"
        body = " . ".join(f"[{f.permutation.one_line()}]" for f in self.factors)
        return f"D^{self.inf} . {body}"
