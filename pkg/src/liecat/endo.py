"""Endomorphisms of a free Lie algebra and the maps built from them.

Composition is right-to-left: ``(phi * psi)(p) == phi(psi(p))``.  With
matrices whose columns are generator images this gives
``to_matrix(phi * psi) == to_matrix(phi) * to_matrix(psi)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import (
    BadSpec,
    ContextMismatch,
    DegreeOverflow,
    FieldMismatch,
    NotInvertible,
    NotLinear,
    Singular,
    ZeroScale,
)
from .liepoly import FreeLieAlgebra, LiePoly, bar_transform, substitute
from .matrix import MatrixN
from .scalar import FieldAut, Scalar, apply_sigma


class Endo:
    """Lie-algebra endomorphism given by the images of the generators."""

    __slots__ = ("alg", "images")

    def __init__(self, alg: FreeLieAlgebra, images: Sequence[LiePoly]):
        images = tuple(images)
        if len(images) != alg.n_gens:
            raise BadSpec(f"need {alg.n_gens} generator images, got {len(images)}")
        for im in images:
            if im.alg != alg:
                raise ContextMismatch("generator images must live in the endomorphism's algebra")
        self.alg = alg
        self.images = images

    @classmethod
    def from_mapping(cls, alg: FreeLieAlgebra, mapping: Mapping[str, LiePoly | str]) -> Endo:
        """Unlisted generators are fixed."""
        images = list(alg.gens)
        for name, im in mapping.items():
            images[alg.gen_index(name)] = alg.parse(im) if isinstance(im, str) else im
        return cls(alg, images)

    def __call__(self, p: LiePoly) -> LiePoly:
        return apply(self, p)

    def __getitem__(self, key: str | int) -> LiePoly:
        return self.images[self.alg.gen_index(key)]

    def __mul__(self, other: Endo) -> Endo:
        if not isinstance(other, Endo):
            return NotImplemented
        return compose(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Endo):
            return NotImplemented
        return self.alg == other.alg and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Endo({format_map(self)!r})"

    def __str__(self) -> str:
        return format_map(self)

    # structural classifiers

    @property
    def degree(self) -> int:
        return max((im.degree for im in self.images), default=0)

    def is_identity(self) -> bool:
        return self.images == self.alg.gens

    def is_constant(self) -> bool:
        return all(im == self.images[0] for im in self.images)

    def is_linear(self) -> bool:
        return all(im.is_linear() for im in self.images)

    def is_scalar(self) -> bool:
        if not self.is_linear():
            return False
        a = self.images[0].coefficient((0,))
        return all(im == g.scale(a) for im, g in zip(self.images, self.alg.gens))

    def is_diagonal(self) -> bool:
        if not self.is_linear():
            return False
        m = to_matrix(self)
        return all(not m[r, c] for r in range(m.n) for c in range(m.n) if r != c)

    def is_permutation(self) -> bool:
        gens = self.alg.gens
        return sorted(gens.index(im) if im in gens else -1 for im in self.images) == list(range(len(gens)))

    def is_triangular(self) -> bool:
        """``x_i -> a_i x_i + f(x_1..x_{i-1})`` with every ``a_i`` nonzero."""
        for i, im in enumerate(self.images):
            a = im.coefficient((i,))
            if not a:
                return False
            rest = im - self.alg.gen(i).scale(a)
            if any(self.alg.gen_index(nm) >= i for nm in rest.support()):
                return False
        return True

    def linear_part(self) -> MatrixN:
        """Matrix of the degree-1 truncation (columns are images)."""
        alg = self.alg
        n = alg.n_gens
        t = alg.table
        cols = [[im.terms.get(t.letter(r), alg.field.zero) for r in range(n)] for im in self.images]
        return MatrixN([[cols[c][r] for c in range(n)] for r in range(n)], alg.field)


def format_map(phi: Endo | Sequence[LiePoly], names: Sequence[str] | None = None) -> str:
    """``x=>[x,y]; y=>y`` form, accepted back by :func:`parse_map`."""
    if isinstance(phi, Endo):
        names, images = phi.alg.names, phi.images
    else:
        images = phi
    return "; ".join(f"{nm}=>{im}" for nm, im in zip(names, images))


def parse_map(text: str, alg: FreeLieAlgebra, source_names: Sequence[str] | None = None) -> list[LiePoly]:
    """Parse ``"x=>expr; y=>expr"`` into images ordered like ``source_names``.

    Generators not mentioned map to themselves when the source and target
    share the name, and it is an error otherwise.
    """
    source_names = tuple(source_names or alg.names)
    got: dict[str, LiePoly] = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=>" not in chunk:
            raise BadSpec(f"map entry {chunk!r} lacks '=>'")
        lhs, rhs = (s.strip() for s in chunk.split("=>", 1))
        if lhs not in source_names:
            raise BadSpec(f"{lhs!r} is not a source generator (have {', '.join(source_names)})")
        if lhs in got:
            raise BadSpec(f"generator {lhs!r} assigned twice")
        got[lhs] = alg.parse(rhs)
    images = []
    for nm in source_names:
        if nm in got:
            images.append(got[nm])
        elif nm in alg.names:
            images.append(alg.gen(nm))
        else:
            raise BadSpec(f"no image given for {nm!r}")
    return images


# -- core operations ---------------------------------------------------------


def apply(phi: Endo, p: LiePoly) -> LiePoly:
    """The homomorphism extending ``phi``'s generator assignment, applied to ``p``."""
    if p.alg != phi.alg:
        raise ContextMismatch("polynomial and endomorphism live in different algebras")
    return substitute(p, phi.images, phi.alg)


def compose(phi: Endo, psi: Endo) -> Endo:
    """``phi * psi``: apply ``psi`` first."""
    if phi.alg != psi.alg:
        raise ContextMismatch("cannot compose endomorphisms of different algebras")
    return Endo(phi.alg, [apply(phi, im) for im in psi.images])


def identity(alg: FreeLieAlgebra) -> Endo:
    return Endo(alg, alg.gens)


def constant(alg: FreeLieAlgebra, p: LiePoly | str) -> Endo:
    """``c_p``: every generator goes to ``p``."""
    if isinstance(p, str):
        p = alg.parse(p)
    return Endo(alg, [p] * alg.n_gens)


def scalar(alg: FreeLieAlgebra, a) -> Endo:
    """``f_a``: ``x -> a x`` for every generator."""
    a = alg.field.check(a)
    if not a:
        raise ZeroScale("scalar endomorphism needs a nonzero scalar")
    return Endo(alg, [g.scale(a) for g in alg.gens])


def diagonal(alg: FreeLieAlgebra, *coeffs) -> Endo:
    """``tau_{a_1..a_n}``: ``x_i -> a_i x_i``."""
    if len(coeffs) == 1 and isinstance(coeffs[0], (list, tuple)):
        coeffs = tuple(coeffs[0])
    if len(coeffs) != alg.n_gens:
        raise BadSpec(f"need {alg.n_gens} diagonal entries, got {len(coeffs)}")
    return Endo(alg, [g.scale(a) for g, a in zip(alg.gens, coeffs)])


def swap(alg: FreeLieAlgebra, x: str | int, y: str | int) -> Endo:
    """``g_{xy}``: exchange two generators, fix the rest."""
    i, j = alg.gen_index(x), alg.gen_index(y)
    if i == j:
        raise BadSpec("swap needs two distinct generators")
    images = list(alg.gens)
    images[i], images[j] = images[j], images[i]
    return Endo(alg, images)


def stretch(alg: FreeLieAlgebra, y: str | int, m) -> Endo:
    """``g_{my}``: ``y -> m y``, every other generator fixed."""
    m = alg.field.check(m)
    if not m:
        raise ZeroScale("stretch factor must be nonzero")
    j = alg.gen_index(y)
    images = list(alg.gens)
    images[j] = images[j].scale(m)
    return Endo(alg, images)


def shear(alg: FreeLieAlgebra, y: str | int, m, x: str | int | None = None) -> Endo:
    """``g'_{my}``: ``y -> m y + x``, every other generator fixed."""
    m = alg.field.check(m)
    if not m:
        raise ZeroScale("shear factor must be nonzero")
    j = alg.gen_index(y)
    i = alg.gen_index(x) if x is not None else (0 if j != 0 else 1)
    if i == j or alg.n_gens < 2:
        raise BadSpec("shear needs a second generator")
    images = list(alg.gens)
    images[j] = images[j].scale(m) + alg.gen(i)
    return Endo(alg, images)


def triangular(alg: FreeLieAlgebra, spec: Sequence[tuple[object, LiePoly | str]]) -> Endo:
    """``x_i -> a_i x_i + f_i`` where ``f_i`` only involves ``x_1..x_{i-1}``."""
    if len(spec) != alg.n_gens:
        raise BadSpec(f"need {alg.n_gens} triangular entries, got {len(spec)}")
    images = []
    for i, (a, f) in enumerate(spec):
        a = alg.field.check(a)
        if not a:
            raise ZeroScale(f"diagonal coefficient of {alg.names[i]} is zero")
        if isinstance(f, str):
            f = alg.parse(f)
        bad = [nm for nm in f.support() if alg.gen_index(nm) >= i]
        if bad:
            raise BadSpec(f"image of {alg.names[i]} may only add terms in earlier generators, got {sorted(bad)}")
        images.append(alg.gen(i).scale(a) + f)
    return Endo(alg, images)


def from_matrix(alg: FreeLieAlgebra, m: MatrixN) -> Endo:
    if m.n != alg.n_gens:
        raise BadSpec(f"matrix is {m.n}x{m.n}, algebra has {alg.n_gens} generators")
    gens = alg.gens
    images = []
    for c in range(m.n):
        im = alg.zero()
        for r in range(m.n):
            if m[r, c]:
                im = im + gens[r].scale(m[r, c])
        images.append(im)
    return Endo(alg, images)


def to_matrix(phi: Endo) -> MatrixN:
    if not phi.is_linear():
        raise NotLinear(f"{phi} is not linear")
    return phi.linear_part()


def make_family(kind: str, alg: FreeLieAlgebra, *args) -> Endo:
    """Build a named endomorphism: ``constant``, ``scalar``, ``diag``, ``swap``,
    ``stretch``, ``shear``, ``triangular``, ``linear`` or ``identity``."""
    builders = {
        "identity": identity,
        "constant": constant,
        "scalar": scalar,
        "diag": diagonal,
        "swap": swap,
        "stretch": stretch,
        "shear": shear,
        "triangular": triangular,
        "linear": from_matrix,
    }
    try:
        build = builders[kind]
    except KeyError:
        raise BadSpec(f"unknown endomorphism family {kind!r}") from None
    return build(alg, *args)


# -- conjugations ----------------------------------------------------------


def inner_conjugate(a, phi: Endo) -> Endo:
    """``f_a * phi * f_a^{-1}``.

    Computed by composing the three maps; the result must agree with the
    closed form ``x -> bar_transform(phi(x), a)``, and a disagreement is a bug.
    """
    alg = phi.alg
    a = alg.field.check(a)
    if not a:
        raise ZeroScale("inner conjugation needs a nonzero scalar")
    result = compose(scalar(alg, a), compose(phi, scalar(alg, a.inverse())))
    closed = [bar_transform(im, a) for im in phi.images]
    if list(result.images) != closed:
        raise AssertionError(f"f_a conjugation disagrees with the bar transform for {phi}")
    return result


@dataclass(frozen=True)
class SemiMorphism:
    """Additive bracket-preserving map ``p -> base(sigma_F(p))``.

    ``sigma_F`` applies ``sigma`` to every basis coefficient, so the map is
    ``sigma``-semilinear: ``s(lam * p) == sigma(lam) * s(p)``.
    """

    sigma: FieldAut
    base: Endo

    @property
    def alg(self) -> FreeLieAlgebra:
        return self.base.alg

    def __call__(self, p: LiePoly) -> LiePoly:
        return apply(self.base, sigma_coefficients(self.sigma, p))

    def inverse(self) -> SemiMorphism:
        sigma_inv = self.sigma.inverse()
        if self.base.is_identity():
            return SemiMorphism(sigma_inv, self.base)
        check = check_automorphism(self.base)
        if check.verdict != "yes":
            raise NotInvertible(f"cannot invert {self.base} ({check.verdict})")
        inv = check.witness
        # sigma^{-1}_F . beta == beta' . sigma^{-1}_F with beta'(x) = sigma^{-1}_F(beta(x))
        twisted = Endo(inv.alg, [sigma_coefficients(sigma_inv, im) for im in inv.images])
        return SemiMorphism(sigma_inv, twisted)


def sigma_coefficients(sigma: FieldAut, p: LiePoly) -> LiePoly:
    return p.map_coefficients(lambda c: p.alg.field.check(apply_sigma(sigma, c)))


def make_sigma_F(sigma: FieldAut, alg: FreeLieAlgebra) -> SemiMorphism:
    if sigma.kind == "conjugation" and alg.field.d != sigma.d:
        raise FieldMismatch(f"conjugation over Q(sqrt {sigma.d}) on an algebra over {alg.field}")
    return SemiMorphism(sigma, identity(alg))


def semi_conjugate(s: SemiMorphism, phi: Endo) -> Endo:
    """``s * phi * s^{-1}`` read off on the generators."""
    if s.alg != phi.alg:
        raise ContextMismatch("semi-morphism and endomorphism live in different algebras")
    s_inv = s.inverse()
    return Endo(phi.alg, [s(apply(phi, s_inv(g))) for g in phi.alg.gens])


def det_character(g: Endo, k: int) -> Scalar:
    """``h(g) = det(g)**k`` on invertible linear endomorphisms."""
    m = to_matrix(g)
    d = m.det()
    if not d:
        raise Singular(f"{g} is not invertible")
    return d ** k


def diagonal_twist(k: int, g: Endo) -> Endo:
    """``h~(g)``: ``x -> h(g) g(x)`` with ``h = det**k``."""
    h = det_character(g, k)
    return Endo(g.alg, [im.scale(h) for im in g.images])


# -- invertibility -----------------------------------------------------------


@dataclass(frozen=True)
class AutCheck:
    """``verdict`` is ``yes`` (with an inverse), ``no`` (with a reason) or ``inconclusive``."""

    verdict: str
    witness: Endo | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.verdict == "yes"


def _is_two_sided_inverse(phi: Endo, psi: Endo) -> bool:
    try:
        return compose(phi, psi).is_identity() and compose(psi, phi).is_identity()
    except DegreeOverflow:
        return False


def formal_inverse(phi: Endo, degree: int) -> Endo:
    """Truncation at ``degree`` of the power-series inverse of ``phi``.

    Built degree by degree: if ``phi(psi(x)) - x`` starts in degree ``d``
    with component ``R``, subtract ``lin^{-1}(R)`` from ``psi(x)`` where
    ``lin`` is the linear part of ``phi``.  Requires an invertible linear part.
    """
    alg = phi.alg
    lin_inv = from_matrix(alg, phi.linear_part().inverse())
    psi = list(lin_inv.images)
    gens = alg.gens
    for d in range(2, degree + 1):
        for i in range(alg.n_gens):
            residual = (substitute(psi[i], phi.images, alg, max_degree=d) - gens[i]).component(d)
            if residual:
                psi[i] = psi[i] - substitute(residual, lin_inv.images, alg)
    return Endo(alg, psi)


def check_automorphism(phi: Endo, witness: Endo | None = None, cap: int | None = None) -> AutCheck:
    """Decide invertibility of ``phi`` as far as the degree cap allows.

    ``no`` is certified by a singular linear part (the induced map on the
    abelianization is then not onto).  ``yes`` needs an explicit two-sided
    inverse; the search tries the supplied witness, then the truncated formal
    inverse.  Anything else is ``inconclusive``.
    """
    alg = phi.alg
    cap = alg.cap if cap is None else min(cap, alg.cap)
    if witness is not None and _is_two_sided_inverse(phi, witness):
        return AutCheck("yes", witness, "supplied witness is a two-sided inverse")
    lin = phi.linear_part()
    if not lin.is_invertible():
        return AutCheck("no", None, "linear part is singular")
    candidate = formal_inverse(phi, cap)
    if _is_two_sided_inverse(phi, candidate):
        return AutCheck("yes", candidate, f"inverse found within degree {cap}")
    return AutCheck("inconclusive", None, f"no inverse of degree <= {cap} verifies within the cap")
