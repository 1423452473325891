"""Exact scalars over Q or a quadratic extension Q(sqrt d).

A :class:`Scalar` is ``a + b*w`` with ``a, b`` rational and ``w*w == d``.
Pure rationals carry ``d = None`` and mix freely with any quadratic
context; two different quadratic contexts never mix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from .errors import DivisionByZero, FieldMismatch

_ZERO = Fraction(0)


def _is_squarefree(d: int) -> bool:
    n = abs(d)
    k = 2
    while k * k <= n:
        if n % (k * k) == 0:
            return False
        k += 1
    return True


def _join(d1: int | None, d2: int | None) -> int | None:
    if d1 is None:
        return d2
    if d2 is None or d1 == d2:
        return d1
    raise FieldMismatch(f"cannot mix Q(sqrt {d1}) and Q(sqrt {d2})")


class Scalar:
    """Exact field element ``a + b*sqrt(d)``; treated as immutable."""

    __slots__ = ("a", "b", "d")

    a: Fraction
    b: Fraction
    d: int | None

    def __init__(self, a=0, b=0, d: int | None = None):
        a = Fraction(a)
        b = Fraction(b)
        if d is None and b:
            raise FieldMismatch("irrational part requires a quadratic context")
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, d: int | None) -> Scalar:
        s = object.__new__(cls)
        s.a = a
        s.b = b
        s.d = d
        return s

    @property
    def kind(self) -> str:
        return "rational" if self.d is None else "quad-ext"

    @property
    def is_rational(self) -> bool:
        return not self.b

    # arithmetic -----------------------------------------------------------

    def __add__(self, other) -> Scalar:
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._raw(self.a + o.a, self.b + o.b, _join(self.d, o.d))

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar._raw(-self.a, -self.b, self.d)

    def __pos__(self) -> Scalar:
        return self

    def __sub__(self, other) -> Scalar:
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return Scalar._raw(self.a - o.a, self.b - o.b, _join(self.d, o.d))

    def __rsub__(self, other) -> Scalar:
        return as_scalar(other) - self

    def __mul__(self, other) -> Scalar:
        if isinstance(other, int):
            return Scalar._raw(self.a * other, self.b * other, self.d)
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        d = _join(self.d, o.d)
        if not self.b and not o.b:
            return Scalar._raw(self.a * o.a, _ZERO, d)
        return Scalar._raw(
            self.a * o.a + self.b * o.b * d,
            self.a * o.b + self.b * o.a,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> Scalar:
        return Scalar._raw(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - d*b^2`` down to Q."""
        if not self.b:
            return self.a * self.a
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> Scalar:
        if not self:
            raise DivisionByZero("inverse of zero")
        if not self.b:
            return Scalar._raw(1 / self.a, _ZERO, self.d)
        n = self.norm()
        return Scalar._raw(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other) -> Scalar:
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> Scalar:
        return as_scalar(other) * self.inverse()

    def __pow__(self, k: int) -> Scalar:
        if k < 0:
            return self.inverse() ** (-k)
        result = Scalar._raw(Fraction(1), _ZERO, self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison -----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        o = as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        if self.b or o.b:
            if self.d is not None and o.d is not None and self.d != o.d:
                raise FieldMismatch(f"cannot compare Q(sqrt {self.d}) and Q(sqrt {o.d})")
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __repr__(self) -> str:
        if self.d is None:
            return f"Scalar({self.a})"
        return f"Scalar({self.a}, {self.b}, d={self.d})"

    def __str__(self) -> str:
        return format_scalar(self)


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions and Scalars; ``NotImplemented`` otherwise."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, Rational):
        return Scalar._raw(Fraction(x), _ZERO, None)
    return NotImplemented


def coerce(x) -> Scalar:
    s = as_scalar(x)
    if s is NotImplemented:
        raise TypeError(f"not a scalar: {x!r}")
    return s


def field_arithmetic(op: str, x, y=None):
    """Dispatch ``add|mul|neg|inv|eq`` on exact scalars."""
    x = coerce(x)
    if op == "add":
        return x + coerce(y)
    if op == "mul":
        return x * coerce(y)
    if op == "neg":
        return -x
    if op == "inv":
        return x.inverse()
    if op == "eq":
        return x == coerce(y)
    raise ValueError(f"unknown field operation {op!r}")


def in_prime_subfield(x) -> bool:
    return not coerce(x).b


@dataclass(frozen=True)
class Field:
    """Coefficient field: Q when ``d is None``, otherwise Q(sqrt d)."""

    d: int | None = None

    def __post_init__(self):
        if self.d is not None:
            if self.d in (0, 1) or not _is_squarefree(self.d):
                raise ValueError(f"d must be a squarefree integer other than 0, 1; got {self.d}")

    @classmethod
    def parse(cls, spec: str) -> Field:
        """Parse ``q`` or ``q-sqrt:<d>``."""
        spec = spec.strip().lower()
        if spec in ("q", "qq", "rational"):
            return cls(None)
        m = re.fullmatch(r"q-sqrt:([+-]?\d+)", spec)
        if not m:
            raise ValueError(f"unknown field spec {spec!r}; expected 'q' or 'q-sqrt:<d>'")
        return cls(int(m.group(1)))

    @property
    def is_quadratic(self) -> bool:
        return self.d is not None

    def __call__(self, a=0, b=0) -> Scalar:
        if b and self.d is None:
            raise FieldMismatch("Q has no irrational elements")
        if self.d is None:
            return Scalar(a)
        return Scalar(a, b, self.d)

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    @property
    def sqrt(self) -> Scalar:
        """The adjoined square root ``w``."""
        if self.d is None:
            raise FieldMismatch("Q has no adjoined square root")
        return Scalar(0, 1, self.d)

    def contains(self, x: Scalar) -> bool:
        x = coerce(x)
        return not x.b or x.d == self.d

    def check(self, x) -> Scalar:
        """Return ``x`` as an element of this field or raise FieldMismatch."""
        x = coerce(x)
        if x.b and x.d != self.d:
            raise FieldMismatch(f"{x!r} is not in {self}")
        if self.d is not None and x.d is None:
            return Scalar._raw(x.a, x.b, self.d)
        return x

    def parse_scalar(self, text: str) -> Scalar:
        from .parser import parse_scalar

        return parse_scalar(text, self)

    def __str__(self) -> str:
        return "q" if self.d is None else f"q-sqrt:{self.d}"


@dataclass(frozen=True)
class FieldAut:
    """Automorphism of the coefficient field: identity or sqrt-conjugation."""

    kind: str = "identity"
    d: int | None = None

    def __post_init__(self):
        if self.kind not in ("identity", "conjugation"):
            raise ValueError(f"unknown field automorphism {self.kind!r}")
        if self.kind == "conjugation" and self.d is None:
            raise FieldMismatch("conjugation is only defined over a quadratic extension")

    @classmethod
    def identity(cls) -> FieldAut:
        return cls("identity")

    @classmethod
    def conjugation(cls, field: Field | int) -> FieldAut:
        d = field.d if isinstance(field, Field) else field
        return cls("conjugation", d)

    def inverse(self) -> FieldAut:
        return self

    def __call__(self, x) -> Scalar:
        return apply_sigma(self, x)


def apply_sigma(sigma: FieldAut, x) -> Scalar:
    x = coerce(x)
    if sigma.kind == "identity":
        return x
    if x.d is not None and x.d != sigma.d:
        raise FieldMismatch(f"conjugation of Q(sqrt {sigma.d}) applied to {x!r}")
    if not x.b:
        return x
    return x.conjugate()


def format_scalar(x: Scalar) -> str:
    """Text form accepted back by the expression parser."""
    if not x.b:
        return str(x.a)
    if not x.a:
        return "w" if x.b == 1 else f"({x.b})*w"
    return f"({x.a})+({x.b})*w"
