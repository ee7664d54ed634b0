"""Recursive-descent parser for polynomial expressions.

Grammar (whitespace between tokens is ignored)::

    expr    := ["+" | "-"] term { ("+" | "-") term }
    term    := factor { "*" factor }
    factor  := "-" factor | base
    base    := atom [ "^" natural ]
    atom    := rational | variable | "(" expr ")"
    rational:= natural [ "/" natural ]
    variable matches [A-Za-z][A-Za-z0-9]*

There is no general division operator: ``/`` only joins two integer
literals into a rational literal, and ``^`` only accepts a nonnegative
integer literal.  Implicit multiplication is a syntax error.  The
canonical printer (``str(Polynomial)``) emits text this grammar accepts,
so parse -> print -> parse is the identity.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, VarSet


class ParseError(ValueError):
    """Syntax or name error in a polynomial expression, with its position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_OPERATORS = set("+-*^()/")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPERATORS:
            tokens.append(("op", ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and text[j].isalnum():
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: VarSet):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.vars = vars

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str) -> None:
        kind, text, at = self.peek()
        if kind != "op" or text != op:
            raise ParseError(f"expected {op!r}, found {text or 'end of input'!r}", at)
        self.advance()

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, text, at = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", at)
        return p

    def expr(self) -> Polynomial:
        kind, text, _ = self.peek()
        negate = False
        if kind == "op" and text in "+-":
            negate = text == "-"
            self.advance()
        p = self.term()
        if negate:
            p = -p
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text in "+-":
                self.advance()
                q = self.term()
                p = p + q if text == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, text, _ = self.peek()
            if kind == "op" and text == "*":
                self.advance()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        kind, text, _ = self.peek()
        if kind == "op" and text == "-":
            self.advance()
            return -self.factor()
        return self.base()

    def base(self) -> Polynomial:
        p = self.atom()
        kind, text, _ = self.peek()
        if kind == "op" and text == "^":
            self.advance()
            kind, text, at = self.peek()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer literal", at)
            self.advance()
            p = p ** int(text)
        return p

    def atom(self) -> Polynomial:
        kind, text, at = self.advance()
        if kind == "int":
            value = Fraction(int(text))
            k, t, at2 = self.peek()
            if k == "op" and t == "/":
                self.advance()
                k, t, at3 = self.peek()
                if k != "int":
                    raise ParseError("expected an integer denominator", at3)
                self.advance()
                if int(t) == 0:
                    raise ParseError("zero denominator in rational literal", at3)
                value /= int(t)
            return Polynomial.constant(self.vars, value)
        if kind == "name":
            if text not in self.vars:
                raise ParseError(
                    f"unknown variable {text!r} (expected one of {', '.join(self.vars.names)})", at
                )
            return Polynomial.variable(self.vars, text)
        if kind == "op" and text == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(f"unexpected {text or 'end of input'!r}", at)


def parse(text: str, vars: VarSet) -> Polynomial:
    """Parse ``text`` into the canonical polynomial over ``vars``."""
    return _Parser(text, vars).parse()
