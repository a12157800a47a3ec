"""Text syntax for difference polynomials.

Grammar (whitespace-insensitive)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ['^' nat]
    atom   := nat | name ['@' nat] | '(' expr ')'
    name   := 'x' | 'y<j>' | 'u<i>_<j>'

``@k`` applies the k-th transform to a variable; ``/`` divides by a
base-field element (anything else is rejected); ``x`` is only legal over
Q(x).  ``parse_poly(print(p))`` returns p for every polynomial the
package prints.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional

from .coeffs import RatFunc
from .poly import DiffPoly, main_var, param_var


class ParseError(ValueError):
    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} (at position {position})")


class Token(NamedTuple):
    kind: str
    value: str
    pos: int


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<nat>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^@()]))"
)

_MAIN_RE = re.compile(r"^y(\d+)$")
_PARAM_RE = re.compile(r"^u(\d+)_(\d+)$")


def tokenize(text: str) -> list[Token]:
    out: list[Token] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
            break
        pos = m.end()
        for kind in ("nat", "name", "op"):
            val = m.group(kind)
            if val is not None:
                out.append(Token(kind, val, m.start(kind)))
                break
    return out


class PolyParser:
    def __init__(
        self,
        text: str,
        *,
        field: str = "Q",
        mains: Optional[Iterable[int]] = None,
        param_blocks: Optional[Iterable[int]] = None,
    ):
        if field not in ("Q", "Qx"):
            raise ValueError(f"unknown field {field!r}")
        self.text = text
        self.field = field
        self.mains = None if mains is None else set(mains)
        self.param_blocks = None if param_blocks is None else set(param_blocks)
        self.tokens = tokenize(text)
        self.i = 0

    # -- token helpers ----------------------------------------------------

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _next(self) -> Token:
        tok = self._peek()
        if tok is None:
            raise ParseError("unexpected end of input", len(self.text), self.text)
        self.i += 1
        return tok

    def _accept_op(self, *ops: str) -> Optional[Token]:
        tok = self._peek()
        if tok and tok.kind == "op" and tok.value in ops:
            self.i += 1
            return tok
        return None

    def _expect_nat(self, what: str) -> int:
        tok = self._next()
        if tok.kind != "nat":
            raise ParseError(f"expected {what}", tok.pos, self.text)
        return int(tok.value)

    # -- grammar ----------------------------------------------------------

    def parse(self) -> DiffPoly:
        p = self.expr()
        tok = self._peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.value!r}", tok.pos, self.text)
        return p

    def expr(self) -> DiffPoly:
        negate = bool(self._accept_op("-"))
        total = self.term()
        if negate:
            total = -total
        while True:
            tok = self._accept_op("+", "-")
            if tok is None:
                return total
            rhs = self.term()
            total = total + rhs if tok.value == "+" else total - rhs

    def term(self) -> DiffPoly:
        total = self.factor()
        while True:
            tok = self._accept_op("*", "/")
            if tok is None:
                return total
            rhs = self.factor()
            if tok.value == "*":
                total = total * rhs
            else:
                if not rhs.is_constant():
                    raise ParseError(
                        "divisor must be a base-field element", tok.pos, self.text
                    )
                if rhs.is_zero():
                    raise ParseError("division by zero", tok.pos, self.text)
                total = total / rhs.constant_value()

    def factor(self) -> DiffPoly:
        base = self.atom()
        if self._accept_op("^"):
            e = self._expect_nat("an exponent")
            return base**e
        return base

    def atom(self) -> DiffPoly:
        tok = self._next()
        if tok.kind == "nat":
            return DiffPoly.const(Fraction(int(tok.value)))
        if tok.kind == "op" and tok.value == "(":
            inner = self.expr()
            if not self._accept_op(")"):
                where = self._peek()
                raise ParseError(
                    "expected ')'", where.pos if where else len(self.text), self.text
                )
            return inner
        if tok.kind == "name":
            return self._variable(tok)
        raise ParseError(f"unexpected {tok.value!r}", tok.pos, self.text)

    def _variable(self, tok: Token) -> DiffPoly:
        name = tok.value
        if name == "x":
            if self.field != "Qx":
                raise ParseError("x is only available over Q(x)", tok.pos, self.text)
            if self._peek() and self._peek().kind == "op" and self._peek().value == "@":
                raise ParseError("x cannot be shifted directly", tok.pos, self.text)
            return DiffPoly.const(RatFunc.x())
        shift = 0
        if self._accept_op("@"):
            shift = self._expect_nat("a shift")
        m = _MAIN_RE.match(name)
        if m:
            j = int(m.group(1))
            if self.mains is not None and j not in self.mains:
                raise ParseError(f"undeclared variable {name}", tok.pos, self.text)
            return DiffPoly.var(main_var(j, shift))
        m = _PARAM_RE.match(name)
        if m:
            block, j = int(m.group(1)), int(m.group(2))
            if self.param_blocks is not None and block not in self.param_blocks:
                raise ParseError(f"undeclared parameter block u{block}", tok.pos, self.text)
            return DiffPoly.var(param_var(block, j, shift))
        raise ParseError(f"unknown name {name!r}", tok.pos, self.text)


def parse_poly(
    text: str,
    *,
    field: str = "Q",
    mains: Optional[Iterable[int]] = None,
    param_blocks: Optional[Iterable[int]] = None,
) -> DiffPoly:
    return PolyParser(
        text, field=field, mains=mains, param_blocks=param_blocks
    ).parse()
