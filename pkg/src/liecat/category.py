"""Morphisms between free Lie algebras and their action on points.

A morphism ``s: F(Y) -> F(X)`` is stored by the images of ``Y``.  A point
is a homomorphism ``F(X) -> H`` into a fixed algebra ``H`` (by default the
rank-2 algebra ``F(x, y)``); every quantity is computed within explicit
degree caps, so statements about points hold "within cap".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BadSpec, ContextMismatch, DegreeOverflow, ShapeMismatch
from .endo import AutCheck, Endo, check_automorphism
from .liepoly import FreeLieAlgebra, LiePoly, substitute
from .scalar import Field

N_MAX = 4


def free_object(names: Sequence[str], cap: int, field: Field | None = None, n_max: int = N_MAX) -> FreeLieAlgebra:
    if not 1 <= len(names) <= n_max:
        raise ShapeMismatch(f"object rank must be between 1 and {n_max}, got {len(names)}")
    return FreeLieAlgebra(tuple(names), cap, field or Field())


def default_h(cap: int, field: Field | None = None) -> FreeLieAlgebra:
    """``H = F(x, y)``."""
    return FreeLieAlgebra(("x", "y"), cap, field or Field())


class Morphism:
    """Homomorphism ``F(source) -> F(target)`` given by the images of the source generators."""

    __slots__ = ("source", "target", "images")

    def __init__(self, source: FreeLieAlgebra, target: FreeLieAlgebra, images: Sequence[LiePoly]):
        images = tuple(images)
        if len(images) != source.n_gens:
            raise ShapeMismatch(f"need {source.n_gens} images, got {len(images)}")
        for im in images:
            if im.alg != target:
                raise ContextMismatch("images must live in the target algebra")
        self.source = source
        self.target = target
        self.images = images

    def __call__(self, p: LiePoly) -> LiePoly:
        if p.alg != self.source:
            raise ShapeMismatch("argument is not in the morphism's source")
        return substitute(p, self.images, self.target)

    def __mul__(self, other: Morphism) -> Morphism:
        """``self * other``: apply ``other`` first."""
        if not isinstance(other, Morphism):
            return NotImplemented
        return compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.source.names == other.source.names
            and self.target == other.target
            and self.images == other.images
        )

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        body = "; ".join(f"{nm}=>{im}" for nm, im in zip(self.source.names, self.images))
        return f"{type(self).__name__}({body!r})"

    @classmethod
    def identity(cls, alg: FreeLieAlgebra) -> Morphism:
        return cls(alg, alg, alg.gens)

    @classmethod
    def from_endo(cls, phi: Endo) -> Morphism:
        return cls(phi.alg, phi.alg, phi.images)


class Point(Morphism):
    """A homomorphism ``F(X) -> H``, i.e. an element of ``Hom(F(X), H)``."""

    @property
    def h(self) -> FreeLieAlgebra:
        return self.target


def compose(s1: Morphism, s2: Morphism) -> Morphism:
    if s2.target != s1.source:
        raise ShapeMismatch("composable morphisms need s2.target == s1.source")
    return Morphism(s2.source, s1.target, [s1(im) for im in s2.images])


def tilde_map(s: Morphism, nu: Point) -> Point:
    """``s~(nu) = nu s``, a point of ``F(Y)`` for ``s: F(Y) -> F(X)``."""
    if nu.source.names != s.target.names:
        raise ShapeMismatch("point is not defined on the morphism's target")
    images = [substitute(im, nu.images, nu.target) for im in s.images]
    return Point(s.source, nu.target, images)


def alpha(nu: Point) -> tuple[LiePoly, ...]:
    """``nu -> (nu(x_1), ..., nu(x_n))``."""
    return nu.images


def alpha_inv(values: Sequence[LiePoly], source: FreeLieAlgebra, h: FreeLieAlgebra | None = None) -> Point:
    if len(values) != source.n_gens:
        raise ShapeMismatch(f"need a {source.n_gens}-tuple, got {len(values)}")
    if h is None:
        if not values:
            raise ShapeMismatch("cannot infer H from an empty tuple")
        h = values[0].alg
    return Point(source, h, values)


def poly_map(s: Morphism, values: Sequence[LiePoly], h: FreeLieAlgebra | None = None) -> tuple[LiePoly, ...]:
    """``s^alpha(a_1..a_n) = (w_1(a), ..., w_m(a))`` with ``w_i = s(y_i)``."""
    if len(values) != s.target.n_gens:
        raise ShapeMismatch(f"need a {s.target.n_gens}-tuple, got {len(values)}")
    if h is None:
        h = values[0].alg
    return tuple(substitute(w, values, h) for w in s.images)


def projection(values: Sequence[LiePoly]) -> LiePoly:
    """``pi(b_1, ..., b_k) = b_1``."""
    return values[0]


# -- constants -----------------------------------------------------------------


def nu0(source: FreeLieAlgebra, f0: FreeLieAlgebra) -> Morphism:
    """Collapse every generator of ``source`` onto the single generator of ``f0``."""
    if f0.n_gens != 1:
        raise ShapeMismatch("nu0 lands in a rank-1 algebra")
    return Morphism(source, f0, [f0.gens[0]] * source.n_gens)


def nu_a(f0: FreeLieAlgebra, w: LiePoly) -> Morphism:
    """``x_0 -> w``."""
    if f0.n_gens != 1:
        raise ShapeMismatch("nu_a starts from a rank-1 algebra")
    return Morphism(f0, w.alg, [w])


def constant_morphism(kind: str, *args) -> Morphism:
    if kind == "nu0":
        return nu0(*args)
    if kind == "nu_a":
        return nu_a(*args)
    raise BadSpec(f"unknown constant morphism {kind!r}")


def rank_one(cap: int, field: Field | None = None, name: str = "x0") -> FreeLieAlgebra:
    return FreeLieAlgebra((name,), cap, field or Field())


def component_decompose(s: Morphism, x0: FreeLieAlgebra, f0: FreeLieAlgebra | None = None) -> list[Morphism]:
    """Constants ``s_i = nu_{w_i} nu0: F(X0) -> F(X)`` with ``w_i = s(y_i)``.

    ``x0`` is the object ``F(X0)`` and ``f0`` the rank-1 algebra the
    constants factor through.
    """
    top = max((w.degree for w in s.images), default=1)
    f0 = f0 or rank_one(max(top, 1), s.target.field)
    collapse = nu0(x0, f0)
    out = []
    for w in s.images:
        out.append(compose(nu_a(f0, w), collapse))
    return out


def decomposition_holds(s: Morphism, components: Sequence[Morphism], values: Sequence[LiePoly]) -> bool:
    lhs = poly_map(s, values)
    rhs = tuple(projection(poly_map(si, values)) for si in components)
    return lhs == rhs


# -- separation ------------------------------------------------------------------


@dataclass
class Separation:
    found: bool
    point: Point | None = None
    generator: str | None = None
    values: tuple[LiePoly, LiePoly] | None = None
    tried: int = 0
    budget: int = 0
    note: str = ""


def ladder(h: FreeLieAlgebra, n: int, start: int = 0) -> list[LiePoly]:
    """``ad_x^k(y)`` for ``k = start .. start+n-1``; these generate a free subalgebra."""
    if h.n_gens < 2 or start + n > h.cap:
        return []
    x, cur = h.gens[0], h.gens[1]
    seq = []
    for k in range(start + n):
        if k >= start:
            seq.append(cur)
        if k + 1 < start + n:
            cur = x.bracket(cur)
    return seq


def candidate_points(source: FreeLieAlgebra, h: FreeLieAlgebra, budget: int) -> Iterator[tuple[LiePoly, ...]]:
    """Basis-word tuples by (total degree, indices), then the free-subalgebra ladders."""
    words = [w for w in h.table.words if w.degree <= budget]
    n = source.n_gens
    combos = sorted(
        itertools.product(words, repeat=n),
        key=lambda tup: (sum(w.degree for w in tup), tuple(w.index for w in tup)),
    )
    for tup in combos:
        yield tuple(h.basis(w.index) for w in tup)
    for start in (0, 1):
        lad = ladder(h, n, start)
        if lad and max(p.degree for p in lad) <= budget:
            yield tuple(lad)


def find_separating_point(
    s1: Morphism,
    s2: Morphism,
    budget: int = 4,
    h: FreeLieAlgebra | None = None,
) -> Separation:
    """Search for a point ``nu`` with ``s1~(nu) != s2~(nu)``.

    Candidates are generator images of degree <= ``budget``.  A negative
    answer only means the enumeration was exhausted.
    """
    if s1.source.names != s2.source.names or s1.target != s2.target:
        raise ShapeMismatch("morphisms must share source and target")
    if s1 == s2:
        raise BadSpec("find_separating_point needs two distinct morphisms")
    diffs = [(k, a - b) for k, (a, b) in enumerate(zip(s1.images, s2.images)) if a != b]
    top = max(d.degree for _, d in diffs)
    h = h or default_h(1, s1.target.field)
    need = max(h.cap, top * budget)
    h = h.with_cap(need)
    tried = 0
    for values in candidate_points(s1.target, h, budget):
        tried += 1
        for k, diff in diffs:
            try:
                val = substitute(diff, values, h)
            except DegreeOverflow:
                continue
            if val:
                nu = Point(s1.target, h, values)
                y = s1.source.names[k]
                pair = (substitute(s1.images[k], values, h), substitute(s2.images[k], values, h))
                return Separation(True, nu, y, pair, tried, budget)
    return Separation(False, None, None, None, tried, budget, "enumeration exhausted")


def basis_candidate_check(elements: Sequence[LiePoly], alg: FreeLieAlgebra, cap: int | None = None) -> AutCheck:
    """Is ``x_i -> elements[i]`` an automorphism, i.e. do the elements form a free basis?"""
    if len(elements) != alg.n_gens:
        raise ShapeMismatch(f"need {alg.n_gens} elements, got {len(elements)}")
    return check_automorphism(Endo(alg, elements), cap=cap)


# -- random data -------------------------------------------------------------------


def random_morphism(source: FreeLieAlgebra, target: FreeLieAlgebra, rng, max_degree: int, n_terms: int = 2) -> Morphism:
    from .liepoly import random_poly

    return Morphism(source, target, [random_poly(target, rng, max_degree, n_terms) for _ in source.names])


def random_point(source: FreeLieAlgebra, h: FreeLieAlgebra, rng, max_degree: int, n_terms: int = 2) -> Point:
    from .liepoly import random_poly

    return Point(source, h, [random_poly(h, rng, max_degree, n_terms) for _ in source.names])
