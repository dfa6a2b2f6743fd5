"""Parser for the text form of Q(w) polynomials.

Grammar (whitespace ignored):

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-')* power
    power  := atom ('^' integer)?
    atom   := integer | name | '(' expr ')'

The name ``w`` denotes the primitive cube root of unity; every other
name is a variable.  Division is only allowed when the divisor is a
nonzero constant.  The printer in mpoly emits this grammar, so parsing
its output round-trips exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .eisenstein import ZETA
from .mpoly import MPoly


class ParseError(ValueError):
    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out: list[_Tok] = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if m is None:
            stripped = text[i:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", i)
        if m.lastgroup is None:
            break
        out.append(_Tok(m.lastgroup, m.group(m.lastgroup), m.start(m.lastgroup)))
        i = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.tokens[self.i]

    def take(self) -> _Tok:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str) -> None:
        t = self.take()
        if t.kind != "op" or t.text != op:
            raise ParseError(f"expected {op!r}", t.pos)

    def parse(self) -> MPoly:
        p = self.expr()
        t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected trailing input {t.text!r}", t.pos)
        return p

    def expr(self) -> MPoly:
        p = self.term()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "+-":
                self.take()
                q = self.term()
                p = p + q if t.text == "+" else p - q
            else:
                return p

    def term(self) -> MPoly:
        p = self.unary()
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "*/":
                self.take()
                q = self.unary()
                if t.text == "*":
                    p = p * q
                else:
                    if not q.is_constant() or q.is_zero():
                        raise ParseError("division only by a nonzero constant", t.pos)
                    p = p * q.constant_value().inverse()
            else:
                return p

    def unary(self) -> MPoly:
        sign = 1
        while True:
            t = self.peek()
            if t.kind == "op" and t.text in "+-":
                self.take()
                if t.text == "-":
                    sign = -sign
            else:
                break
        p = self.power()
        return p if sign == 1 else -p

    def power(self) -> MPoly:
        base = self.atom()
        t = self.peek()
        if t.kind == "op" and t.text == "^":
            self.take()
            e = self.take()
            if e.kind != "int":
                raise ParseError("exponent must be a nonnegative integer", e.pos)
            return base ** int(e.text)
        return base

    def atom(self) -> MPoly:
        t = self.take()
        if t.kind == "int":
            return MPoly.constant(int(t.text))
        if t.kind == "name":
            if t.text == "w":
                return MPoly.constant(ZETA)
            return MPoly.variable(t.text)
        if t.kind == "op" and t.text == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(f"unexpected token {t.text or 'end of input'!r}", t.pos)


def parse_poly(text: str, variables: tuple[str, ...] | None = None) -> MPoly:
    """Parse text into an MPoly, optionally fixing the ambient variables.

    When ``variables`` is given, the parsed polynomial must not mention
    anything outside it, and the result carries exactly that tuple.
    """
    p = _Parser(text).parse()
    if variables is not None:
        extra = set(p.used_variables()) - set(variables)
        if extra:
            raise ParseError(
                f"unexpected variable(s) {', '.join(sorted(extra))}", 0
            )
        p = p.restrict_to_used().with_variables(variables)
    return p


def canonical_str(p: MPoly) -> str:
    """The canonical text form; parse_poly inverts it."""
    return str(p)
