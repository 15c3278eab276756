"""
Tokenizer, recursive-descent parser, printer and elaborator for braid expressions.

``parse_expr`` builds an AST, ``print_braid`` renders it back, and ``elaborate`` turns
it into a literal ``BraidWord`` on a declared strand count.
"""

import re
from collections.abc import Iterator
from typing import NamedTuple

from braidkit.braids.exceptions import StrandMismatchError
from braidkit.braids.models import BraidWord
from braidkit.braids.words import a_gen, concat, delta, full_twist, generator, omega, power
from braidkit.expr.exceptions import BraidSyntaxError, ExpressionTooLargeError
from braidkit.expr.models import Atom, Expr, Gen, Group, Named, NamedKind, Power

_TOKENS: dict[str, str] = {
    "pair": r"A([0-9]+),([0-9]+)",
    "named": r"[DWF][0-9]+",
    "gen": r"s[0-9]+",
    "lpar": r"\(",
    "rpar": r"\)",
    "caret": r"\^",
    "int": r"-?[0-9]+",
    "skip": r"\s+",
    "error": r".",
}
_REGEX = re.compile("|".join(f"(?P<{name}>{text})" for name, text in _TOKENS.items()))

MAX_EXPONENT = 10_000
MAX_WORD_LENGTH = 1_000_000
_MAX_DIGITS = 9


class Token(NamedTuple):
    kind: str
    text: str
    offset: int


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def tokenize(text: str) -> Iterator[Token]:
    """
    Split ``text`` into tokens with UTF-8 byte offsets.

    Raises:
        BraidSyntaxError: On a character outside the grammar.
    """
    for mo in _REGEX.finditer(text):
        kind = str(mo.lastgroup)
        if kind == "skip":
            continue
        offset = _byte_offset(text, mo.start())
        if kind == "error":
            raise BraidSyntaxError(text, offset, f"unexpected character {mo.group()!r}")
        yield Token(kind, mo.group(), offset)


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.tokens = list(tokenize(text))
        self.pos = 0

    def _peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _end_offset(self) -> int:
        return len(self.text.encode("utf-8"))

    def _error(self, token: Token | None, reason: str) -> BraidSyntaxError:
        offset = token.offset if token is not None else self._end_offset()
        return BraidSyntaxError(self.text, offset, reason)

    def _number(self, token: Token, digits: str) -> int:
        if len(digits.lstrip("-")) > _MAX_DIGITS:
            raise self._error(token, f"number {digits[:_MAX_DIGITS]}... has too many digits")
        return int(digits)

    def parse(self) -> Expr:
        expr = self._expr()
        token = self._peek()
        if token is not None:
            raise self._error(token, f"unexpected {token.text!r}")
        return expr

    def _expr(self) -> Expr:
        atoms: list[Atom] = []
        while (token := self._peek()) is not None and token.kind != "rpar":
            atoms.append(self._atom())
        return Expr(tuple(atoms))

    def _atom(self) -> Atom:
        token = self._peek()
        if token is None:
            raise self._error(None, "unexpected end of input")
        self.pos += 1
        node: Atom
        if token.kind == "gen":
            node = Gen(self._number(token, token.text[1:]))
        elif token.kind == "named":
            node = Named(NamedKind(token.text[0]), (self._number(token, token.text[1:]),))
        elif token.kind == "pair":
            i, j = token.text[1:].split(",")
            node = Named(NamedKind.PURE, (self._number(token, i), self._number(token, j)))
        elif token.kind == "lpar":
            body = self._expr()
            closing = self._peek()
            if closing is None or closing.kind != "rpar":
                raise self._error(closing, "expected ')'")
            self.pos += 1
            node = Group(body)
        else:
            raise self._error(token, f"unexpected {token.text!r}")

        while (caret := self._peek()) is not None and caret.kind == "caret":
            self.pos += 1
            exponent = self._peek()
            if exponent is None or exponent.kind != "int":
                raise self._error(exponent, "expected an integer exponent after '^'")
            self.pos += 1
            value = self._number(exponent, exponent.text)
            if abs(value) > MAX_EXPONENT:
                raise BraidSyntaxError(
                    self.text,
                    exponent.offset,
                    f"exponent {value} is outside -{MAX_EXPONENT}..{MAX_EXPONENT}",
                    ["Split the power into a product, e.g. (s1^5000)^4"],
                )
            node = Power(node, value)
        return node


def parse_expr(text: str) -> Expr:
    """
    Parse a braid expression into its AST.

    Raises:
        BraidSyntaxError: With the byte offset of the first offending token.

    Example:
        >>> parse_expr("(s1 s2)^3")
        Expr(atoms=(Power(base=Group(body=Expr(atoms=(Gen(index=1), Gen(index=2)))), exponent=3),))
    """
    return _Parser(text).parse()


def print_braid(node: Expr | Atom) -> str:
    """Render an AST in the surface syntax; ``parse_expr(print_braid(e)) == e``."""
    match node:
        case Expr(atoms=atoms):
            return " ".join(print_braid(atom) for atom in atoms)
        case Gen(index=index):
            return f"s{index}"
        case Named(kind=NamedKind.PURE, args=(i, j)):
            return f"A{i},{j}"
        case Named(kind=kind, args=(m,)):
            return f"{kind.value}{m}"
        case Group(body=body):
            return f"({print_braid(body)})"
        case Power(base=base, exponent=exponent):
            return f"{print_braid(base)}^{exponent}"
    raise TypeError(f"not a braid expression node: {node!r}")


def _require_strands(name: str, needed: int, strands: int) -> None:
    if needed != strands:
        raise StrandMismatchError(needed, strands, f"use {name} with")


def elaborate(node: Expr | Atom, strands: int) -> BraidWord:
    """
    Expand an AST into a literal word on ``strands`` strands.

    ``D m`` and ``F m`` need m = strands, ``W n`` needs 2n = strands; ``A i,j`` and
    generators are checked against ``strands``. Exponents repeat the base word, or its
    inverse for negative exponents, up to ``MAX_WORD_LENGTH`` letters per power.

    Raises:
        GeneratorIndexError: If a generator or A_{i,j} index does not fit.
        StrandMismatchError: If a named element lives on another strand count.
        ExpressionTooLargeError: If a power expands past ``MAX_WORD_LENGTH`` letters.
    """
    match node:
        case Expr(atoms=atoms):
            return concat(BraidWord.identity(strands), *(elaborate(a, strands) for a in atoms))
        case Gen(index=index):
            return generator(index, strands)
        case Named(kind=NamedKind.PURE, args=(i, j)):
            return a_gen(i, j, strands)
        case Named(kind=NamedKind.DELTA, args=(m,)):
            _require_strands(f"D{m}", m, strands)
            return delta(m)
        case Named(kind=NamedKind.FULL_TWIST, args=(m,)):
            _require_strands(f"F{m}", m, strands)
            return full_twist(m)
        case Named(kind=NamedKind.OMEGA, args=(n,)):
            _require_strands(f"W{n}", 2 * n, strands)
            return omega(n)
        case Group(body=body):
            return elaborate(body, strands)
        case Power(base=base, exponent=exponent):
            word = elaborate(base, strands)
            length = len(word) * abs(exponent)
            if length > MAX_WORD_LENGTH:
                raise ExpressionTooLargeError(length, MAX_WORD_LENGTH)
            return power(word, exponent)
    raise TypeError(f"not a braid expression node: {node!r}")


def parse_braid(text: str, strands: int) -> BraidWord:
    """
    Parse and elaborate ``text`` on ``strands`` strands.

    Example:
        >>> str(parse_braid("s2 s3 s1^-1 s2^-1", 4))  # "s2 s3 s1^-1 s2^-1"
    """
    return elaborate(parse_expr(text), strands)
