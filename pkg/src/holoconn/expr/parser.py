"""Recursive-descent parser for the expression grammar.

::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('+' | '-') unary | power
    power   := atom ('^' INTEGER)?
    atom    := INTEGER | 'i' | NAME | '(' expr ')'

``NAME`` must be one of the two declared chart variables. Exponents are
non-negative integer literals; rationals are written as quotients.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import InputSyntaxError, UnknownVariable
from .rational import DEFAULT_NAMES, Expr
from .scalar import I

__all__ = ["parse_expr", "tokenize", "Token"]

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # INT, NAME, OP, END
    text: str
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        col = m.start(m.lastindex) + 1
        if m.group(1) is not None:
            tokens.append(Token("INT", m.group(1), col))
        elif m.group(2) is not None:
            tokens.append(Token("NAME", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise InputSyntaxError(f"unexpected character {ch!r}", 1, col)
            tokens.append(Token("OP", ch, col))
        pos = m.end()
    tokens.append(Token("END", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, names: tuple[str, str]):
        self.tokens = tokenize(text)
        self.k = 0
        self.names = names

    def peek(self) -> Token:
        return self.tokens[self.k]

    def take(self) -> Token:
        t = self.tokens[self.k]
        self.k += 1
        return t

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.peek()
        return InputSyntaxError(msg, 1, tok.column)

    def parse(self) -> Expr:
        if self.peek().kind == "END":
            raise self.error("empty expression")
        e = self.expr()
        if self.peek().kind != "END":
            raise self.error(f"unexpected {self.peek().text!r}")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek().text in ("+", "-") and self.peek().kind == "OP":
            op = self.take().text
            rhs = self.term()
            e = e + rhs if op == "+" else e - rhs
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.peek().kind == "OP" and self.peek().text in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            if op.text == "*":
                e = e * rhs
            else:
                if rhs.is_zero():
                    raise InputSyntaxError("division by an expression that is identically zero", 1, op.column)
                e = e / rhs
        return e

    def unary(self) -> Expr:
        t = self.peek()
        if t.kind == "OP" and t.text in ("+", "-"):
            self.take()
            e = self.unary()
            return -e if t.text == "-" else e
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.peek().kind == "OP" and self.peek().text == "^":
            self.take()
            t = self.peek()
            if t.kind != "INT":
                raise self.error("exponent must be a non-negative integer literal")
            self.take()
            base = base ** int(t.text)
            if self.peek().kind == "OP" and self.peek().text == "^":
                raise self.error("chained exponents need parentheses")
        return base

    def atom(self) -> Expr:
        t = self.take()
        if t.kind == "INT":
            return Expr.const(int(t.text))
        if t.kind == "NAME":
            if t.text == "i":
                return Expr.const(I)
            if t.text == self.names[0]:
                return Expr.var(0)
            if t.text == self.names[1]:
                return Expr.var(1)
            raise UnknownVariable(f"unknown variable {t.text!r} (declared: {', '.join(self.names)})", 1, t.column)
        if t.kind == "OP" and t.text == "(":
            e = self.expr()
            close = self.take()
            if close.kind != "OP" or close.text != ")":
                raise self.error("expected ')'", close)
            return e
        if t.kind == "END":
            raise self.error("unexpected end of expression", t)
        raise self.error(f"unexpected {t.text!r}", t)


def parse_expr(text: str, names: tuple[str, str] = DEFAULT_NAMES) -> Expr:
    """Parse ``text`` into a canonical :class:`Expr`.

    Errors carry ``line=1`` and a 1-based column inside ``text``.
    """
    if "i" in names:
        raise ValueError("'i' is reserved for the imaginary unit")
    return _Parser(text, tuple(names)).parse()
