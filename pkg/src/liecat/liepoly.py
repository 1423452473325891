"""Lie polynomials over a fixed Lyndon basis.

:class:`FreeLieAlgebra` is the context (generator names, degree cap,
coefficient field); :class:`LiePoly` values live in exactly one context and
are immutable.  Exceeding the cap is always an error, never a silent
truncation; the few routines that truncate on purpose take an explicit
``max_degree`` argument.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import ContextMismatch, DegreeOverflow, FieldMismatch, UnknownGenerator, ZeroScale
from .hall import BasisTable, HallWord, generate_basis
from .scalar import Field, Scalar, as_scalar, coerce

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
RESERVED = frozenset({"w"})


def default_names(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class FreeLieAlgebra:
    """Free Lie algebra on ``names`` truncated at degree ``cap`` over ``field``."""

    names: tuple[str, ...]
    cap: int
    field: Field = field(default_factory=Field)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("a free Lie algebra needs at least one generator")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate generator names in {names}")
        for nm in names:
            if not _NAME.match(nm):
                raise ValueError(f"bad generator name {nm!r}")
            if nm in RESERVED:
                raise ValueError(f"{nm!r} is reserved for the square root of d")

    @classmethod
    def of_rank(cls, n: int, cap: int, field: Field | None = None) -> FreeLieAlgebra:
        return cls(default_names(n), cap, field or Field())

    @property
    def n_gens(self) -> int:
        return len(self.names)

    @property
    def table(self) -> BasisTable:
        return generate_basis(len(self.names), self.cap)

    def with_cap(self, cap: int) -> FreeLieAlgebra:
        return FreeLieAlgebra(self.names, cap, self.field)

    # element constructors

    def zero(self) -> LiePoly:
        return LiePoly(self, {})

    def gen(self, key: str | int) -> LiePoly:
        k = self.gen_index(key)
        return LiePoly(self, {self.table.letter(k): self.field.one})

    @property
    def gens(self) -> tuple[LiePoly, ...]:
        return tuple(self.gen(k) for k in range(self.n_gens))

    def gen_index(self, key: str | int) -> int:
        if isinstance(key, int):
            if not 0 <= key < self.n_gens:
                raise UnknownGenerator(f"generator index {key} out of range")
            return key
        try:
            return self.names.index(key)
        except ValueError:
            raise UnknownGenerator(f"unknown generator {key!r} (have {', '.join(self.names)})") from None

    def basis(self, i: int) -> LiePoly:
        return LiePoly(self, {i: self.field.one})

    def word_index(self, word: Sequence[str | int]) -> int:
        letters = tuple(self.gen_index(c) for c in word)
        try:
            return self.table.index_of[letters]
        except KeyError:
            raise ValueError(f"{word} is not a basis word within degree {self.cap}") from None

    def from_terms(self, terms: Mapping[int, object]) -> LiePoly:
        chk = self.field.check
        return LiePoly(self, {i: chk(c) for i, c in terms.items() if c})

    def parse(self, text: str) -> LiePoly:
        from .parser import parse_expr

        return parse_expr(text, self)

    def bracketing(self, i: int) -> str:
        return self.table.bracketing(i, self.names)

    def hall_word(self, i: int) -> HallWord:
        return self.table.words[i]


def _check_same(p: LiePoly, q: LiePoly) -> None:
    if p.alg is q.alg or p.alg == q.alg:
        return
    a, b = p.alg, q.alg
    if a.names == b.names and a.cap == b.cap:
        raise FieldMismatch(f"fields differ: {a.field} vs {b.field}")
    raise ContextMismatch(f"polynomials from different algebras: {a} vs {b}")


class LiePoly:
    """Finite combination of basis words; ``terms`` maps basis index to a nonzero Scalar."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: FreeLieAlgebra, terms: dict[int, Scalar]):
        self.alg = alg
        self.terms = terms

    # linear structure

    def __add__(self, other: LiePoly) -> LiePoly:
        if not isinstance(other, LiePoly):
            return NotImplemented
        _check_same(self, other)
        acc = dict(self.terms)
        for i, c in other.terms.items():
            s = acc.get(i)
            s = c if s is None else s + c
            if s:
                acc[i] = s
            else:
                acc.pop(i, None)
        return LiePoly(self.alg, acc)

    def __neg__(self) -> LiePoly:
        return LiePoly(self.alg, {i: -c for i, c in self.terms.items()})

    def __sub__(self, other: LiePoly) -> LiePoly:
        if not isinstance(other, LiePoly):
            return NotImplemented
        return self + (-other)

    def scale(self, lam) -> LiePoly:
        lam = self.alg.field.check(lam)
        if not lam:
            return self.alg.zero()
        return LiePoly(self.alg, {i: c * lam for i, c in self.terms.items()})

    def __mul__(self, lam) -> LiePoly:
        if as_scalar(lam) is NotImplemented:
            return NotImplemented
        return self.scale(lam)

    __rmul__ = __mul__

    def __truediv__(self, lam) -> LiePoly:
        if as_scalar(lam) is NotImplemented:
            return NotImplemented
        return self.scale(coerce(lam).inverse())

    def bracket(self, other: LiePoly, max_degree: int | None = None) -> LiePoly:
        return bracket(self, other, max_degree)

    # comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, LiePoly):
            _check_same(self, other)
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.alg, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"LiePoly({format_expr(self)!r})"

    def __str__(self) -> str:
        return format_expr(self)

    # measures

    def items(self) -> list[tuple[int, Scalar]]:
        return sorted(self.terms.items())

    def coefficient(self, key: int | str | Sequence) -> Scalar:
        i = key if isinstance(key, int) else self.alg.word_index(key)
        return self.terms.get(i, self.alg.field.zero)

    @property
    def degree(self) -> int:
        """Largest term degree; 0 for the zero polynomial."""
        t = self.alg.table
        return max((t.degree(i) for i in self.terms), default=0)

    @property
    def low_degree(self) -> int:
        t = self.alg.table
        return min((t.degree(i) for i in self.terms), default=0)

    def is_linear(self) -> bool:
        t = self.alg.table
        return all(t.degree(i) == 1 for i in self.terms)

    def is_homogeneous(self) -> bool:
        t = self.alg.table
        return len({t.degree(i) for i in self.terms}) <= 1

    def support(self) -> frozenset[str]:
        """Generators occurring in some basis word of the polynomial."""
        t, names = self.alg.table, self.alg.names
        return frozenset(names[k] for i in self.terms for k in t.words[i].word)

    def occurrences(self) -> dict[str, dict[str, int]]:
        """Per basis word: letter -> number of occurrences."""
        out = {}
        for i in sorted(self.terms):
            out[self.alg.bracketing(i)] = word_occurrences(self.alg, i)
        return out

    def component(self, d: int) -> LiePoly:
        t = self.alg.table
        return LiePoly(self.alg, {i: c for i, c in self.terms.items() if t.degree(i) == d})

    def truncate(self, max_degree: int) -> LiePoly:
        t = self.alg.table
        return LiePoly(self.alg, {i: c for i, c in self.terms.items() if t.degree(i) <= max_degree})

    def homogeneous_components(self) -> list[LiePoly]:
        return homogeneous_components(self)

    def bar_transform(self, a) -> LiePoly:
        return bar_transform(self, a)

    def to_associative(self) -> NcPoly:
        return to_associative(self)

    def map_coefficients(self, f) -> LiePoly:
        out = {}
        for i, c in self.terms.items():
            v = f(c)
            if v:
                out[i] = v
        return LiePoly(self.alg, out)


def word_occurrences(alg: FreeLieAlgebra, i: int) -> dict[str, int]:
    """``l_x(u)`` for every generator ``x`` present in basis word ``u_i``."""
    counts: dict[str, int] = {}
    for k in alg.table.words[i].word:
        nm = alg.names[k]
        counts[nm] = counts.get(nm, 0) + 1
    return counts


def multidegree(alg: FreeLieAlgebra, i: int) -> tuple[int, ...]:
    md = [0] * alg.n_gens
    for k in alg.table.words[i].word:
        md[k] += 1
    return tuple(md)


def poly_linear_ops(op: str, p: LiePoly, q_or_lam) -> LiePoly:
    if op == "add":
        return p + q_or_lam
    if op == "sub":
        return p - q_or_lam
    if op == "scale":
        return p.scale(q_or_lam)
    raise ValueError(f"unknown linear operation {op!r}")


@dataclass(frozen=True)
class Measures:
    degree: int
    support: frozenset[str]
    occurrences: dict[str, dict[str, int]]


def poly_measures(p: LiePoly) -> Measures:
    return Measures(p.degree, p.support(), p.occurrences())


def bracket(p: LiePoly, q: LiePoly, max_degree: int | None = None) -> LiePoly:
    """Bilinear extension of the basis bracket.

    With ``max_degree`` set, products of degree above it are dropped
    (deliberate truncation); otherwise they raise :class:`DegreeOverflow`.
    """
    _check_same(p, q)
    t = p.alg.table
    cap = t.cap
    acc: dict[int, Scalar] = {}
    deg = t.degree
    for i, ci in p.terms.items():
        di = deg(i)
        for j, cj in q.terms.items():
            d = di + deg(j)
            if max_degree is not None and d > max_degree:
                continue
            if d > cap:
                raise DegreeOverflow(f"bracket reaches degree {d} beyond cap {cap}")
            sc = t.bracket_words(i, j)
            if not sc:
                continue
            cij = ci * cj
            for k, e in sc.items():
                v = cij * e
                s = acc.get(k)
                acc[k] = v if s is None else s + v
    return LiePoly(p.alg, {k: c for k, c in acc.items() if c})


def normalize_bracket(u: HallWord | int, v: HallWord | int, alg: FreeLieAlgebra) -> LiePoly:
    """``[u, v]`` of two basis words, expanded in the basis."""
    i = u if isinstance(u, int) else u.index
    j = v if isinstance(v, int) else v.index
    sc = alg.table.bracket_words(i, j)
    return LiePoly(alg, {k: alg.field(c) for k, c in sc.items()})


def homogeneous_components(p: LiePoly) -> list[LiePoly]:
    """``[p_1, ..., p_s]`` with ``p_d`` the degree-``d`` part and ``s = deg p``."""
    return [p.component(d) for d in range(1, p.degree + 1)]


def bar_transform(p: LiePoly, a) -> LiePoly:
    """Multiply the degree-``d`` component by ``a**(d-1)``."""
    a = p.alg.field.check(a)
    if not a:
        raise ZeroScale("bar transform needs a nonzero scalar")
    t = p.alg.table
    powers: dict[int, Scalar] = {}
    out = {}
    for i, c in p.terms.items():
        d = t.degree(i)
        f = powers.get(d)
        if f is None:
            f = powers[d] = a ** (d - 1)
        out[i] = c * f
    return LiePoly(p.alg, out)


def substitute(
    p: LiePoly,
    images: Sequence[LiePoly],
    target: FreeLieAlgebra | None = None,
    max_degree: int | None = None,
) -> LiePoly:
    """Evaluate ``p`` at ``x_k -> images[k]``, i.e. apply the induced homomorphism."""
    if len(images) != p.alg.n_gens:
        raise ValueError(f"need {p.alg.n_gens} images, got {len(images)}")
    if target is None:
        target = images[0].alg if images else p.alg
    for im in images:
        if im.alg != target:
            raise ContextMismatch("images must live in the target algebra")
    src = p.alg.table
    memo: dict[int, LiePoly] = {}

    def image(i: int) -> LiePoly:
        got = memo.get(i)
        if got is None:
            h = src.words[i]
            if h.is_letter:
                got = images[h.word[0]]
            else:
                got = bracket(image(h.left), image(h.right), max_degree)
            memo[i] = got
        return got

    acc: dict[int, Scalar] = {}
    chk = target.field.check
    for i, c in p.terms.items():
        c = chk(c)
        for k, e in image(i).terms.items():
            v = c * e
            s = acc.get(k)
            acc[k] = v if s is None else s + v
    out = LiePoly(target, {k: c for k, c in acc.items() if c})
    if max_degree is not None:
        out = out.truncate(max_degree)
    return out


# -- associative envelope ---------------------------------------------------


class NcPoly:
    """Element of the free associative algebra: ``{word tuple: coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, ...], object] | None = None):
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def letter(cls, k: int) -> NcPoly:
        return cls({(k,): 1})

    def __add__(self, other: NcPoly) -> NcPoly:
        acc = dict(self.terms)
        for w, c in other.terms.items():
            acc[w] = acc.get(w, 0) + c
        return NcPoly(acc)

    def __neg__(self) -> NcPoly:
        return NcPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: NcPoly) -> NcPoly:
        return self + (-other)

    def __mul__(self, other) -> NcPoly:
        if isinstance(other, NcPoly):
            acc: dict = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    acc[w] = acc.get(w, 0) + c1 * c2
            return NcPoly(acc)
        if as_scalar(other) is NotImplemented:
            return NotImplemented
        return NcPoly({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other) -> NcPoly:
        if as_scalar(other) is NotImplemented:
            return NotImplemented
        return NcPoly({w: other * c for w, c in self.terms.items()})

    def commutator(self, other: NcPoly) -> NcPoly:
        return self * other - other * self

    def __eq__(self, other) -> bool:
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def substitute(self, images: Sequence[NcPoly]) -> NcPoly:
        """Algebra homomorphism ``letter k -> images[k]`` applied to ``self``."""
        acc = NcPoly()
        for w, c in self.terms.items():
            prod = NcPoly({(): c})
            for k in w:
                prod = prod * images[k]
            acc = acc + prod
        return acc

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            mono = "".join(names[k] if names else f"x{k + 1}" for k in w)
            parts.append(_signed(coerce(c), mono))
        return _join_terms(parts)

    def __repr__(self) -> str:
        return f"NcPoly({self.format()!r})"


def _envelope_words(table: BasisTable) -> dict[int, NcPoly]:
    env = getattr(table, "_envelope", None)
    if env is None:
        env = {}
        table._envelope = env
    return env


def word_envelope(table: BasisTable, i: int) -> NcPoly:
    """Commutator image of basis word ``i``, built from its bracketing only."""
    env = _envelope_words(table)
    got = env.get(i)
    if got is None:
        h = table.words[i]
        if h.is_letter:
            got = NcPoly.letter(h.word[0])
        else:
            got = word_envelope(table, h.left).commutator(word_envelope(table, h.right))
        env[i] = got
    return got


def to_associative(p: LiePoly) -> NcPoly:
    acc: dict = {}
    t = p.alg.table
    for i, c in p.terms.items():
        for w, e in word_envelope(t, i).terms.items():
            acc[w] = acc.get(w, 0) + c * e
    return NcPoly(acc)


# -- text -------------------------------------------------------------------


def _scalar_factor(c: Scalar) -> str:
    if not c.b:
        return str(c.a)
    parts = []
    if c.a:
        parts.append(str(c.a))
    b = c.b
    if b == 1:
        wb = "w"
    elif b == -1:
        wb = "-w"
    else:
        wb = f"{b}*w"
    if parts and not wb.startswith("-"):
        wb = "+" + wb
    parts.append(wb)
    return "(" + "".join(parts) + ")"


def _signed(c: Scalar, atom: str) -> str:
    """Render one term as ``'+ ...'`` / ``'- ...'`` for later joining."""
    if not c.b:
        neg = c.a < 0
        mag = -c.a if neg else c.a
        body = atom if mag == 1 else f"{mag}*{atom}"
        return ("- " if neg else "+ ") + body
    if not c.a:
        neg = c.b < 0
        mag = -c.b if neg else c.b
        body = f"w*{atom}" if mag == 1 else f"{mag}*w*{atom}"
        return ("- " if neg else "+ ") + body
    return "+ " + _scalar_factor(c) + "*" + atom


def _join_terms(parts: list[str]) -> str:
    s = " ".join(parts)
    if s.startswith("+ "):
        return s[2:]
    return "-" + s[2:]


def format_expr(p: LiePoly) -> str:
    """Canonical text: terms in basis order, round-trips through :func:`parse_expr`."""
    if not p.terms:
        return "0"
    return _join_terms([_signed(c, p.alg.bracketing(i)) for i, c in sorted(p.terms.items())])


def terms_json(p: LiePoly) -> list[dict]:
    from .scalar import format_scalar

    return [
        {
            "word": [p.alg.names[k] for k in p.alg.table.words[i].word],
            "bracketing": p.alg.bracketing(i),
            "coeff": format_scalar(c),
        }
        for i, c in sorted(p.terms.items())
    ]


def random_poly(alg: FreeLieAlgebra, rng, max_degree: int | None = None, n_terms: int = 3) -> LiePoly:
    """Random element: words uniform per degree, coefficients in {-3..3}\\{0}.

    Over a quadratic field each coefficient also gets an irrational part
    drawn from {-1, 0, 1}.
    """
    top = min(max_degree or alg.cap, alg.cap)
    degrees = [d for d in range(1, top + 1) if alg.table.by_degree[d - 1]]
    terms: dict[int, Scalar] = {}
    for _ in range(n_terms):
        d = rng.choice(degrees)
        h = rng.choice(alg.table.by_degree[d - 1])
        a = rng.choice((-3, -2, -1, 1, 2, 3))
        b = rng.choice((-1, 0, 1)) if alg.field.is_quadratic else 0
        terms[h.index] = alg.field(a, b)
    return alg.from_terms(terms)


def random_homogeneous(alg: FreeLieAlgebra, rng, degree: int, n_terms: int = 2) -> LiePoly:
    words = alg.table.by_degree[degree - 1]
    if not words:
        return alg.zero()
    terms = {}
    for _ in range(n_terms):
        h = rng.choice(words)
        terms[h.index] = alg.field(rng.choice((-3, -2, -1, 1, 2, 3)))
    return alg.from_terms(terms)


def sum_polys(polys: Iterable[LiePoly], alg: FreeLieAlgebra) -> LiePoly:
    out = alg.zero()
    for p in polys:
        out = out + p
    return out
