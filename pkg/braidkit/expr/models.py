"""
Abstract syntax tree of braid expressions.

Grammar::

    expr  := atom*
    atom  := GEN | NAMED | '(' expr ')' | atom '^' INT
    GEN   := 's' INT
    NAMED := 'D' INT | 'W' INT | 'F' INT | 'A' INT ',' INT
"""

from dataclasses import dataclass
from enum import StrEnum


class NamedKind(StrEnum):
    """Named braid families available in expressions."""

    DELTA = "D"
    """Half twist Δ_m on m strands."""

    OMEGA = "W"
    """Block crossing ω_n on 2n strands."""

    FULL_TWIST = "F"
    """Full twist Δ_m² on m strands."""

    PURE = "A"
    """Pure braid generator A_{i,j}."""


@dataclass(frozen=True, slots=True)
class Gen:
    index: int


@dataclass(frozen=True, slots=True)
class Named:
    kind: NamedKind
    args: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Group:
    body: "Expr"


@dataclass(frozen=True, slots=True)
class Power:
    base: "Atom"
    exponent: int


@dataclass(frozen=True, slots=True)
class Expr:
    atoms: tuple["Atom", ...] = ()


Atom = Gen | Named | Group | Power
