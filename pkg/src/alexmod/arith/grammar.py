"""Parser for matrix entries and polynomials.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom (('^' | '**') signed_int)?
    atom   := INT | 'z' | 't' | '(' expr ')'

``p/q`` literals fall out of integer division.  ``z`` is the generator
of the cyclotomic field, ``t`` the polynomial variable (only where a
polynomial is expected).  Negative powers are allowed on constants.
"""

import re

from .field import FieldElement
from .poly import Poly


class ParseError(ValueError):
    def __init__(self, message, text="", offset=0):
        self.text = text
        self.offset = offset
        self.line = text.count("\n", 0, offset) + 1
        self.column = offset - (text.rfind("\n", 0, offset) + 1) + 1
        super().__init__(f"{message} (line {self.line}, column {self.column})")
        self.message = message


_TOKEN = re.compile(r"\s*(?:(\d+)|(\*\*|[-+*/^()])|([A-Za-z_]\w*))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2):
            tokens.append(("op", m.group(2), m.start(2)))
        else:
            tokens.append(("name", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text, field, allow_t):
        self.text = text
        self.field = field
        self.allow_t = allow_t
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                value = value * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    self.error("division only by a nonzero constant", tok)
                value = value * rhs[0].inverse()
        return value

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] in (("op", "^"), ("op", "**")):
            tok = self.take()
            sign = 1
            if self.peek()[:2] == ("op", "-"):
                self.take()
                sign = -1
            elif self.peek()[:2] == ("op", "("):
                # allow z^(-1)
                self.take()
                if self.peek()[:2] == ("op", "-"):
                    self.take()
                    sign = -1
                num = self.take()
                if num[0] != "int":
                    self.error("expected integer exponent", num)
                if self.take()[:2] != ("op", ")"):
                    self.error("expected ')'", self.tokens[self.i - 1])
                return self._raise(base, sign * num[1], tok)
            num = self.take()
            if num[0] != "int":
                self.error("expected integer exponent", num)
            return self._raise(base, sign * num[1], tok)
        return base

    def _raise(self, base, k, tok):
        if k >= 0:
            return base ** k
        if not base.is_constant() or base.is_zero():
            self.error("negative power of a non-constant", tok)
        return Poly.constant(base[0].inverse() ** (-k), self.field)

    def atom(self):
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return Poly.constant(val, self.field)
        if kind == "name":
            if val == "z":
                return Poly.constant(self.field.zeta, self.field)
            if val == "t" and self.allow_t:
                return Poly.t(self.field)
            self.error(f"unknown symbol {val!r}", tok)
        if kind == "op" and val == "(":
            value = self.expr()
            close = self.take()
            if close[:2] != ("op", ")"):
                self.error("expected ')'", close)
            return value
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected {val!r}", tok)


def parse_entry(text, field) -> FieldElement:
    """Parse a field element such as ``"-1/2"`` or ``"z^2+1"``."""
    if isinstance(text, int):
        return field(text)
    p = _Parser(str(text), field, allow_t=False).parse()
    return p[0]


def parse_poly(text, field) -> Poly:
    """Parse a polynomial in ``t`` with coefficients in the field."""
    return _Parser(str(text), field, allow_t=True).parse()
