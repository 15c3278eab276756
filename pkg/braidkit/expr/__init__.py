"""
braidkit.expr — the braid expression language.

Public API::

    from braidkit.expr import parse_expr, parse_braid, print_braid, elaborate, tokenize
    from braidkit.expr import Expr, Gen, Named, NamedKind, Group, Power, BraidSyntaxError
    from braidkit.expr import ExpressionTooLargeError
"""

from braidkit.expr.exceptions import BraidSyntaxError, ExpressionTooLargeError
from braidkit.expr.models import Atom, Expr, Gen, Group, Named, NamedKind, Power
from braidkit.expr.parser import elaborate, parse_braid, parse_expr, print_braid, tokenize

__all__ = [
    "parse_expr",
    "parse_braid",
    "print_braid",
    "elaborate",
    "tokenize",
    "Atom",
    "Expr",
    "Gen",
    "Named",
    "NamedKind",
    "Group",
    "Power",
    "BraidSyntaxError",
    "ExpressionTooLargeError",
]
