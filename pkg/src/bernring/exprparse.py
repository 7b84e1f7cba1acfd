"""A small expression grammar for elements, used by the command line.

Supported constructs (whitespace-insensitive)::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := primary ('^' exponent)?
    primary := RATIONAL | 'T' | 'B' ['(' scalar 'T' ')']
             | 'e' '^' '{' scalar 'T' '}' | '(' expr ')' | 'd' '[' expr ']'

``scalar`` is an optionally signed rational (defaulting to 1), so ``B(2T)``,
``B(-3/2T)``, ``e^{T}`` and ``e^{-1/2T}`` all parse.  ``d[...]`` takes the
derivative of the enclosed element.  Exponents are integers, optionally braced
or parenthesized; a negative exponent is accepted on a single-atom base (it
inverts T-powers, exponentials and B-factors exactly).

Multiplication of elements is the exact ring product (fully reduced), so every
parsed expression is again a plain element.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .elements import Atom, BElement, atom, from_scalar
from .polys import binomial
from .reduction import product_reduce
from .weyl import derivative_of_element


class ExprError(ValueError):
    """Parse or evaluation error, with the offending position for diagnostics."""

    def __init__(self, message: str, text: str, pos: int):
        super().__init__(message)
        self.text = text
        self.pos = pos

    def diagnostic(self) -> str:
        caret = " " * self.pos + "^"
        return f"error: {self} at column {self.pos + 1}\n{self.text}\n{caret}"


_TOKEN_RE = re.compile(r"\s*(?:(\d+(?:/\d+)?)|([BTed])|([-+*^(){}\[\]]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExprError(f"unexpected character {text[pos:].lstrip()[0]!r}", text, len(text) - len(stripped))
        kind = "number" if match.group(1) else "name" if match.group(2) else "symbol"
        value = match.group(1) or match.group(2) or match.group(3)
        start = match.end() - len(value)
        tokens.append((kind, value, start))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.peek()
        if val != value:
            raise ExprError(f"expected {value!r}", self.text, pos)
        return self.advance()

    def fail(self, message: str):
        raise ExprError(message, self.text, self.peek()[2])

    # -- grammar -----------------------------------------------------------

    def parse(self) -> BElement:
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected trailing input {val!r}", self.text, pos)
        return value

    def expr(self) -> BElement:
        value = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.advance()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> BElement:
        value = self.unary()
        while self.peek()[1] == "*":
            self.advance()
            value = product_reduce(value, self.unary())
        return value

    def unary(self) -> BElement:
        if self.peek()[1] == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> BElement:
        base = self.primary()
        if self.peek()[1] != "^":
            return base
        self.advance()
        exponent = self.exponent()
        return _element_power(base, exponent, self)

    def exponent(self) -> int:
        closing = None
        if self.peek()[1] in ("{", "("):
            closing = "}" if self.peek()[1] == "{" else ")"
            self.advance()
        sign = 1
        if self.peek()[1] == "-":
            self.advance()
            sign = -1
        kind, val, pos = self.peek()
        if kind != "number" or "/" in val:
            raise ExprError("expected an integer exponent", self.text, pos)
        self.advance()
        if closing:
            self.expect(closing)
        return sign * int(val)

    def scalar(self, default=Fraction(1)) -> Fraction:
        sign = 1
        if self.peek()[1] == "-":
            self.advance()
            sign = -1
        kind, val, _ = self.peek()
        if kind == "number":
            self.advance()
            if "/" in val:
                num, den = val.split("/")
                return sign * Fraction(int(num), int(den))
            return sign * Fraction(int(val))
        return sign * default

    def primary(self) -> BElement:
        kind, val, pos = self.peek()
        if kind == "number":
            self.advance()
            if "/" in val:
                num, den = val.split("/")
                return from_scalar(Fraction(int(num), int(den)))
            return from_scalar(int(val))
        if val == "T":
            self.advance()
            return atom(1, 0, 1)
        if val == "B":
            self.advance()
            if self.peek()[1] == "(":
                self.advance()
                scale = self.scalar()
                self.expect("T")
                self.expect(")")
                if scale == 0:
                    raise ExprError("argument scale must be nonzero", self.text, pos)
                return atom(0, 1, scale)
            return atom(0, 1, 1)
        if val == "e":
            self.advance()
            self.expect("^")
            self.expect("{")
            shift = self.scalar()
            self.expect("T")
            self.expect("}")
            return atom(0, 0, 1, shift)
        if val == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if val == "d":
            self.advance()
            self.expect("[")
            inner = self.expr()
            self.expect("]")
            return derivative_of_element(inner)
        raise ExprError(f"expected a value, found {val!r}" if val else "unexpected end of input", self.text, pos)


def _invert_single_atom(at: Atom, coeff: Fraction) -> BElement:
    """(coeff * T^m B(bT)^n e^{aT})^-1 as an element of n = 0 atoms."""
    if at.n == 0:
        return BElement({Atom(b=Fraction(1), n=0, m=-at.m, a=-at.a): 1 / coeff})
    terms = {}
    scale = at.b ** (-at.n) / coeff
    for j in range(at.n + 1):
        key = Atom(b=Fraction(1), n=0, m=-at.m - at.n, a=j * at.b - at.a)
        terms[key] = binomial(at.n, j) * Fraction(-1) ** (at.n - j) * scale
    return BElement(terms)


def _element_power(base: BElement, exponent: int, parser: _Parser) -> BElement:
    if exponent >= 0:
        result = from_scalar(1)
        for _ in range(exponent):
            result = product_reduce(result, base)
        return result
    if len(base.terms) != 1:
        parser.fail("negative powers are only defined for a single generator term")
    ((at, coeff),) = base.terms.items()
    inverse = _invert_single_atom(at, coeff)
    return _element_power(inverse, -exponent, parser)


def parse_element(text: str) -> BElement:
    """Parse an expression into a fully reduced element."""
    return _Parser(text).parse()
