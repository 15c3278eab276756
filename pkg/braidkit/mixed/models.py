"""
Pydantic models for the mixed braid groups B_{n,n} ⊂ B²_{n,n} ⊂ B_{2n}.
"""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field


class MixedContext(BaseModel):
    """
    Two blocks of ``n`` strands each: block 1 is {1..n}, block 2 is {n+1..2n}.

    Example:
        >>> ctx = MixedContext(n=2)
        >>> ctx.strands   # 4
        >>> ctx.block_of(3)  # 2
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1, description="Block size; the context has 2n strands.")

    @property
    def strands(self) -> int:
        return 2 * self.n

    @property
    def block1(self) -> range:
        return range(1, self.n + 1)

    @property
    def block2(self) -> range:
        return range(self.n + 1, 2 * self.n + 1)

    def block_of(self, position: int) -> int:
        """Return 1 or 2 for a 1-based strand position."""
        if not 1 <= position <= self.strands:
            raise ValueError(f"position {position} outside 1..{self.strands}")
        return 1 if position <= self.n else 2

    def inflate(self, k: int) -> MixedContext:
        """The context reached by replacing every strand with ``k`` parallel strands."""
        if k < 1:
            raise ValueError(f"cable multiplicity must be at least 1, got {k}")
        return MixedContext(n=self.n * k)
