"""Recursive-descent parser for Lie expressions and scalars.

Grammar (whitespace-insensitive)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('+' | '-') unary | primary
    primary := NUMBER | 'w' | GENERATOR | '[' expr ',' expr ']' | '(' expr ')'

Values are either scalars or Lie polynomials; ``w`` is the adjoined square
root.  A scalar may multiply a Lie element but two Lie elements only combine
through brackets.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ExprSyntaxError, FieldMismatch, UnknownGenerator
from .liepoly import FreeLieAlgebra, LiePoly, format_expr
from .scalar import Field, Scalar

_RAT = r"\(\s*([+-]?\d+(?:\s*/\s*\d+)?)\s*\)"
# the literal ``(p/q)+(r/s)*w`` binds as one coefficient
_TOKEN = re.compile(
    r"\s*(?:(?P<quad>" + _RAT + r"\s*\+\s*" + _RAT + r"\s*\*\s*w\b)"
    r"|(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>.))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        if m.group("quad") is not None:
            toks.append(("quad", (m.group(2), m.group(3)), m.start("quad")))
        elif m.group("num") is not None:
            toks.append(("num", m.group("num"), m.start("num")))
        elif m.group("name") is not None:
            toks.append(("name", m.group("name"), m.start("name")))
        elif m.group("op") is not None:
            ch = m.group("op")
            if ch not in "+-*/[](),":
                raise ExprSyntaxError(f"unexpected character {ch!r}", m.start("op"), text)
            toks.append(("op", ch, m.start("op")))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, alg: FreeLieAlgebra | None, field: Field):
        self.text = text
        self.toks = _tokenize(text)
        self.k = 0
        self.alg = alg
        self.field = field

    def peek(self):
        return self.toks[self.k]

    def error(self, msg: str, tok=None):
        tok = tok or self.peek()
        return ExprSyntaxError(msg, tok[2], self.text)

    def take(self, value: str):
        tok = self.peek()
        if tok[0] == "op" and tok[1] == value:
            self.k += 1
            return tok
        got = "end of input" if tok[0] == "end" else repr(tok[1])
        raise self.error(f"expected {value!r}, found {got}")

    def expect_end(self):
        tok = self.peek()
        if tok[0] != "end":
            raise self.error(f"unexpected {tok[1]!r}")

    def at(self, value: str) -> bool:
        tok = self.peek()
        return tok[0] == "op" and tok[1] == value

    # values are Scalar | LiePoly

    def add(self, a, b, sign: int, tok):
        if isinstance(a, Scalar) and isinstance(b, Scalar):
            return a + b if sign > 0 else a - b
        if isinstance(a, Scalar):
            if a:
                raise self.error("cannot add a nonzero scalar to a Lie element", tok)
            return b if sign > 0 else -b
        if isinstance(b, Scalar):
            if b:
                raise self.error("cannot add a nonzero scalar to a Lie element", tok)
            return a
        return a + b if sign > 0 else a - b

    def expr(self):
        val = self.term()
        while self.at("+") or self.at("-"):
            tok = self.peek()
            self.k += 1
            rhs = self.term()
            val = self.add(val, rhs, 1 if tok[1] == "+" else -1, tok)
        return val

    def term(self):
        val = self.unary()
        while self.at("*") or self.at("/"):
            tok = self.peek()
            self.k += 1
            rhs = self.unary()
            if tok[1] == "*":
                if isinstance(val, LiePoly) and isinstance(rhs, LiePoly):
                    raise self.error("product of two Lie elements; use [a,b]", tok)
                if isinstance(val, LiePoly):
                    val = val.scale(rhs)
                elif isinstance(rhs, LiePoly):
                    val = rhs.scale(val)
                else:
                    val = val * rhs
            else:
                if isinstance(rhs, LiePoly):
                    raise self.error("division by a Lie element", tok)
                if not rhs:
                    raise self.error("division by zero", tok)
                val = val.scale(rhs.inverse()) if isinstance(val, LiePoly) else val / rhs
        return val

    def unary(self):
        if self.at("-"):
            self.k += 1
            return -self.unary()
        if self.at("+"):
            self.k += 1
            return self.unary()
        return self.primary()

    def primary(self):
        tok = self.peek()
        kind, val, pos = tok
        if kind == "num":
            self.k += 1
            return self.field(Fraction(int(val)))
        if kind == "quad":
            self.k += 1
            if self.field.d is None:
                raise FieldMismatch(f"'w' at position {pos} needs a quadratic field")
            a, b = (Fraction(v.replace(" ", "")) for v in val)
            return self.field(a, b)
        if kind == "name":
            self.k += 1
            if val == "w":
                if self.field.d is None:
                    raise FieldMismatch(f"'w' at position {pos} needs a quadratic field")
                return self.field.sqrt
            if self.alg is None:
                raise self.error(f"generator {val!r} in a scalar")
            try:
                return self.alg.gen(val)
            except UnknownGenerator as exc:
                raise UnknownGenerator(f"{exc} at position {pos}") from None
        if kind == "op" and val == "[":
            self.k += 1
            left = self.expr()
            self.take(",")
            right = self.expr()
            self.take("]")
            if not isinstance(left, LiePoly) or not isinstance(right, LiePoly):
                if (isinstance(left, Scalar) and not left) or (isinstance(right, Scalar) and not right):
                    return self.alg.zero() if self.alg else self.field.zero
                raise self.error("bracket operands must be Lie elements", tok)
            return left.bracket(right)
        if kind == "op" and val == "(":
            self.k += 1
            inner = self.expr()
            self.take(")")
            return inner
        if kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {val!r}")


def parse_expr(text: str, alg: FreeLieAlgebra) -> LiePoly:
    """Parse ``text`` into a normalized element of ``alg``."""
    p = _Parser(text, alg, alg.field)
    if p.peek()[0] == "end":
        raise p.error("empty expression")
    val = p.expr()
    p.expect_end()
    if isinstance(val, Scalar):
        if val:
            raise ExprSyntaxError("expression is a nonzero scalar, not a Lie element", 0, text)
        return alg.zero()
    return val


def parse_scalar(text: str, field: Field) -> Scalar:
    """Parse ``p``, ``p/q`` or ``(p/q)+(r/s)*w`` (any scalar-only expression)."""
    p = _Parser(text, None, field)
    if p.peek()[0] == "end":
        raise p.error("empty scalar")
    val = p.expr()
    p.expect_end()
    return val


__all__ = ["parse_expr", "parse_scalar", "format_expr"]
