"""Seeded property suites for the algebraic identities the library relies on.

Every suite is deterministic in its :class:`SuiteConfig`: the random stream
is seeded from ``(suite name, seed)`` and cases run in a fixed order, so the
JSON report is byte-identical across reruns.  All checks are exact equalities.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

from . import category as cat
from .endo import (
    Endo,
    check_automorphism,
    compose,
    constant,
    diagonal,
    diagonal_twist,
    det_character,
    from_matrix,
    identity,
    inner_conjugate,
    make_sigma_F,
    scalar,
    semi_conjugate,
    shear,
    stretch,
    swap,
    to_matrix,
    triangular,
)
from .errors import ConfigInvalid, LiecatError, UnknownSuite
from .hall import generate_basis, witt_dimension
from .liepoly import (
    FreeLieAlgebra,
    bar_transform,
    bracket,
    default_names,
    multidegree,
    random_poly,
    to_associative,
)
from .matrix import MatrixN
from .scalar import Field, FieldAut, apply_sigma, in_prime_subfield

SAMPLING = (
    "coefficients uniform in {-3..3}\\{0} (irrational part in {-1,0,1} over Q(sqrt d)); "
    "basis words uniform within a uniformly chosen degree"
)
MAX_STORED_FAILURES = 20
FHAT_SCALARS = (Fraction(2), Fraction(3), Fraction(-1), Fraction(1, 2))


@dataclass(frozen=True)
class SuiteConfig:
    """``None`` fields fall back to each suite's own defaults."""

    seed: int = 0
    cases: int | None = None
    max_degree: int | None = None
    n_gens: int | None = None
    field: str | None = None

    def __post_init__(self):
        if self.cases is not None and self.cases < 0:
            raise ConfigInvalid("cases must be >= 0")
        if self.max_degree is not None and self.max_degree < 1:
            raise ConfigInvalid("max_degree must be >= 1")
        if self.n_gens is not None and not 1 <= self.n_gens <= cat.N_MAX:
            raise ConfigInvalid(f"n_gens must be between 1 and {cat.N_MAX}")
        if self.field is not None:
            try:
                Field.parse(self.field)
            except ValueError as exc:
                raise ConfigInvalid(str(exc)) from None


@dataclass
class Report:
    suite: str
    config: dict
    sampling: str = SAMPLING
    cases: int = 0
    passed: int = 0
    failed: int = 0
    failures: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    error: str | None = None

    @property
    def verdict(self) -> str:
        if self.error is not None:
            return "ERROR"
        return "PASS" if self.failed == 0 else "FAIL"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["verdict"] = self.verdict
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


class _Run:
    def __init__(self, report: Report):
        self.report = report

    def check(self, name: str, anchor: str, ok: bool, inputs: dict, lhs=None, rhs=None) -> bool:
        r = self.report
        r.cases += 1
        counts = r.details.setdefault("checks", {})
        counts[name] = counts.get(name, 0) + 1
        if ok:
            r.passed += 1
        else:
            r.failed += 1
            if len(r.failures) < MAX_STORED_FAILURES:
                r.failures.append(
                    {
                        "case": r.cases,
                        "check": name,
                        "anchor": anchor,
                        "inputs": {k: str(v) for k, v in inputs.items()},
                        "lhs": str(lhs),
                        "rhs": str(rhs),
                    }
                )
        return ok

    def equal(self, name: str, anchor: str, lhs, rhs, **inputs) -> bool:
        return self.check(name, anchor, lhs == rhs, inputs, lhs, rhs)


def _rng(name: str, cfg: SuiteConfig) -> random.Random:
    return random.Random(f"liecat:{name}:{cfg.seed}")


def _ranks(cfg: SuiteConfig, default: tuple[int, ...]) -> tuple[int, ...]:
    return (cfg.n_gens,) if cfg.n_gens is not None else default


def _field(cfg: SuiteConfig) -> Field:
    return Field.parse(cfg.field) if cfg.field else Field()


def _cases(cfg: SuiteConfig, default: int) -> int:
    return default if cfg.cases is None else cfg.cases


def _alg(n: int, cap: int, fld: Field) -> FreeLieAlgebra:
    return FreeLieAlgebra(default_names(n), cap, fld)


def _random_linear(alg: FreeLieAlgebra, rng: random.Random, invertible: bool = False) -> Endo:
    n = alg.n_gens
    while True:
        m = MatrixN([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)], alg.field)
        if not invertible or m.is_invertible():
            return from_matrix(alg, m)


def _random_endo(alg: FreeLieAlgebra, rng: random.Random, max_degree: int, n_terms: int = 2) -> Endo:
    return Endo(alg, [random_poly(alg, rng, max_degree, n_terms) for _ in alg.names])


def _random_perm(alg: FreeLieAlgebra, rng: random.Random) -> Endo:
    order = list(range(alg.n_gens))
    rng.shuffle(order)
    return Endo(alg, [alg.gen(k) for k in order])


# -- suites --------------------------------------------------------------------


def suite_basis_dims(cfg: SuiteConfig, run: _Run) -> None:
    defaults = {1: 6, 2: 6, 3: 4}
    table = {}
    for n in _ranks(cfg, (1, 2, 3)):
        top = cfg.max_degree or defaults.get(n, 4)
        got = generate_basis(n, top).dimensions()
        want = [witt_dimension(n, d) for d in range(1, top + 1)]
        table[str(n)] = got
        for d in range(1, top + 1):
            run.equal("witt_dimension", "dim F_d = witt_dimension(n, d)", got[d - 1], want[d - 1], n=n, degree=d)
    run.report.details["dimensions"] = table


def suite_jacobi(cfg: SuiteConfig, run: _Run) -> None:
    rng = _rng("jacobi", cfg)
    top = cfg.max_degree or 5
    fld = _field(cfg)
    if top < 3:
        raise ConfigInvalid("jacobi needs max_degree >= 3")
    for n in _ranks(cfg, (2, 3)):
        alg = _alg(n, top, fld)
        for _ in range(_cases(cfg, 1000)):
            d1 = rng.randint(1, top - 2)
            d2 = rng.randint(1, top - 1 - d1)
            d3 = rng.randint(1, top - d1 - d2)
            p, q, r = (random_poly(alg, rng, d, 2) for d in (d1, d2, d3))
            pq = bracket(p, q)
            run.equal("antisymmetry", "[p,q] = -[q,p]", pq, -bracket(q, p), p=p, q=q)
            if 2 * p.degree <= top:
                run.equal("alternating", "[p,p] = 0", bracket(p, p), alg.zero(), p=p)
            jac = bracket(p, bracket(q, r)) + bracket(q, bracket(r, p)) + bracket(r, pq)
            run.equal("jacobi", "[p,[q,r]] + [q,[r,p]] + [r,[p,q]] = 0", jac, alg.zero(), p=p, q=q, r=r)


def suite_envelope(cfg: SuiteConfig, run: _Run) -> None:
    """Every basis pair: envelope of the normalized bracket equals the commutator;
    every structure constant is rational (and integral)."""
    defaults = {2: 6, 3: 5}
    fld = _field(cfg)
    constants = 0
    for n in _ranks(cfg, (2, 3)):
        top = cfg.max_degree or defaults.get(n, 4)
        alg = _alg(n, top, fld)
        words = alg.table.words
        for u in words:
            for v in words:
                if u.degree + v.degree > top:
                    continue
                sc = alg.table.bracket_words(u.index, v.index)
                lie = alg.from_terms(sc)
                lhs = to_associative(lie)
                eu, ev = to_associative(alg.basis(u.index)), to_associative(alg.basis(v.index))
                run.equal(
                    "envelope",
                    "to_associative([u,v]) = uv - vu",
                    lhs,
                    eu.commutator(ev),
                    u=alg.bracketing(u.index),
                    v=alg.bracketing(v.index),
                )
                ok = all(in_prime_subfield(alg.field(c)) and Fraction(c).denominator == 1 for c in sc.values())
                constants += len(sc)
                run.check(
                    "prime_subfield",
                    "structure constants are integers",
                    ok,
                    {"u": alg.bracketing(u.index), "v": alg.bracketing(v.index)},
                    sc,
                    "integers",
                )
    run.report.details["structure_constants_checked"] = constants


def suite_constants(cfg: SuiteConfig, run: _Run) -> None:
    rng = _rng("constants", cfg)
    cap = cfg.max_degree or 6
    fld = _field(cfg)
    pdeg = max(1, min(2, cap // 2))
    for n in _ranks(cfg, (2, 3)):
        if n < 2:
            continue
        alg = _alg(n, cap, fld)
        gens = alg.gens
        for _ in range(_cases(cfg, 200)):
            u = random_poly(alg, rng, cap, 3)
            g = _random_perm(alg, rng)
            run.equal("const_perm", "c_u g = c_u", compose(constant(alg, u), g), constant(alg, u), u=u, g=g)

            p = random_poly(alg, rng, cap, 3)
            x = rng.choice(gens)
            run.equal("right_identity", "c_p c_x = c_p", compose(constant(alg, p), constant(alg, x)), constant(alg, p), p=p, x=x)

            phi = _random_endo(alg, rng, cap, 2)
            run.equal(
                "phi_const_gen", "phi c_x = c_{phi(x)}",
                compose(phi, constant(alg, x)), constant(alg, phi(x)), phi=phi, x=x,
            )

            q = random_poly(alg, rng, cap // pdeg, 2)
            p = random_poly(alg, rng, pdeg, 2)
            phi = _random_endo(alg, rng, cap // pdeg, 2)
            a = rng.choice(FHAT_SCALARS)
            run.equal(
                "const_scaled_gen", "c_q c_{ax} = c_{aq}",
                compose(constant(alg, q), constant(alg, x.scale(a))), constant(alg, q.scale(a)), q=q, a=a,
            )
            run.equal(
                "phi_const", "phi c_p = c_{phi(p)}",
                compose(phi, constant(alg, p)), constant(alg, phi(p)), phi=phi, p=p,
            )

            p1, p2 = random_poly(alg, rng, cap, 2), random_poly(alg, rng, cap, 2)
            rest = [random_poly(alg, rng, cap, 2) for _ in range(n - 2)]
            phi = Endo(alg, [p1, p2, *rest])
            run.equal(
                "linear_combination", "c_{p1+p2} = phi c_{x+y}",
                constant(alg, p1 + p2), compose(phi, constant(alg, gens[0] + gens[1])), p1=p1, p2=p2,
            )


# sample points used to isolate the multidegree-(1,1,0,...) words
def _tau_sample_points(n: int) -> list[tuple[int, ...]]:
    return [tuple([2] * n), tuple([2, 2] + [1] * (n - 2))]


def suite_tau_scaling(cfg: SuiteConfig, run: _Run) -> None:
    rng = _rng("tau_scaling", cfg)
    top = cfg.max_degree or 5
    fld = _field(cfg)
    for n in _ranks(cfg, (2, 3)):
        if n < 2:
            continue
        alg = _alg(n, top, fld)
        points = _tau_sample_points(n)
        random_points = [tuple(rng.choice((-3, -2, 2, 3, Fraction(1, 2))) for _ in range(n)) for _ in range(3)]
        solutions = []
        for h in alg.table.words:
            u = alg.basis(h.index)
            md = multidegree(alg, h.index)
            for a in points + random_points:
                factor = fld.one
                for ai, k in zip(a, md):
                    factor = factor * fld(ai) ** k
                run.equal(
                    "multidegree_law", "tau(u) = prod a_i^{l_i(u)} u",
                    diagonal(alg, *a)(u), u.scale(factor), u=u, a=a,
                )
            if all(diagonal(alg, *a)(u) == u.scale(fld(a[0]) * fld(a[1])) for a in points):
                solutions.append(h.index)
        expected = [h.index for h in alg.table.words if multidegree(alg, h.index) == (1, 1) + (0,) * (n - 2)]
        run.equal(
            "eigen_filter", "{u : tau(u) = a1 a2 u at all sample points} = multidegree (1,1,0..)",
            [alg.bracketing(i) for i in solutions], [alg.bracketing(i) for i in expected], n=n,
        )
        run.report.details[f"eigen_solutions_n{n}"] = [alg.bracketing(i) for i in solutions]


def suite_fhat(cfg: SuiteConfig, run: _Run) -> None:
    rng = _rng("fhat", cfg)
    top = cfg.max_degree or 4
    fld = _field(cfg)
    for n in _ranks(cfg, (2, 3)):
        alg = _alg(n, top, fld)
        for _ in range(_cases(cfg, 100)):
            phi = _random_endo(alg, rng, top, 3)
            for a in FHAT_SCALARS:
                triple = compose(scalar(alg, a), compose(phi, scalar(alg, 1 / a)))
                closed = Endo(alg, [bar_transform(im, a) for im in phi.images])
                run.equal("closed_form", "f_a phi f_a^{-1} (x) = bar(phi(x))", triple, closed, phi=phi, a=a)
            lin = _random_linear(alg, rng)
            a = rng.choice(FHAT_SCALARS)
            run.equal("fixes_linear", "f^_a(phi) = phi for linear phi", inner_conjugate(a, lin), lin, phi=lin, a=a)
    # the two explicit witnesses
    for a in FHAT_SCALARS:
        if top >= 2:
            a3 = _alg(3, max(top, 2), fld)
            phi = Endo.from_mapping(a3, {"x": "x+[y,z]"})
            run.equal("witness_rank3", "f^_a(phi)(x) = x + a[y,z]", inner_conjugate(a, phi)["x"], a3.parse("x") + a3.parse("[y,z]").scale(a), a=a)
            a2 = _alg(2, max(top, 2), fld)
            phi = Endo.from_mapping(a2, {"x": "[x,y]"})
            run.equal("witness_rank2", "f^_a(phi)(x) = a[x,y]", inner_conjugate(a, phi)["x"], a2.parse("[x,y]").scale(a), a=a)


def suite_scalar_center(cfg: SuiteConfig, run: _Run) -> None:
    rng = _rng("scalar_center", cfg)
    fld = _field(cfg)
    cap = cfg.max_degree or 4
    for n in _ranks(cfg, (2, 3, 4)):
        alg = _alg(n, cap, fld)
        for _ in range(_cases(cfg, 100)):
            a = rng.choice(FHAT_SCALARS)
            phi = _random_linear(alg, rng)
            run.equal("commutes_linear", "f_a phi = phi f_a for linear phi", compose(scalar(alg, a), phi), compose(phi, scalar(alg, a)), phi=phi, a=a)
    if cap >= 2:
        alg = _alg(2, cap, fld)
        phi = Endo.from_mapping(alg, {"x": "[x,y]"})
        for a in (2, 3, -1):
            lhs, rhs = compose(scalar(alg, a), phi), compose(phi, scalar(alg, a))
            run.check("non_commuting_witness", "f_a phi != phi f_a for phi(x) = [x,y]", lhs != rhs, {"phi": phi, "a": a}, lhs, rhs)


def suite_semi(cfg: SuiteConfig, run: _Run) -> None:
    rng = _rng("semi", cfg)
    fld = _field(cfg)
    if not fld.is_quadratic:
        fld = Field(2)
    top = cfg.max_degree or 5
    sigma = FieldAut.conjugation(fld)
    for n in _ranks(cfg, (2, 3)):
        alg = _alg(n, top, fld)
        sF = make_sigma_F(sigma, alg)
        for _ in range(_cases(cfg, 500)):
            d1 = rng.randint(1, top - 1)
            p = random_poly(alg, rng, d1, 3)
            q = random_poly(alg, rng, top - d1, 3)
            lam = fld(rng.choice((-3, -2, -1, 1, 2, 3)), rng.choice((-2, -1, 1, 2)))
            run.equal("additive", "sigma_F(p+q) = sigma_F(p) + sigma_F(q)", sF(p + q), sF(p) + sF(q), p=p, q=q)
            run.equal("multiplicative", "sigma_F[p,q] = [sigma_F p, sigma_F q]", sF(bracket(p, q)), bracket(sF(p), sF(q)), p=p, q=q)
            run.equal("semilinear", "sigma_F(lam p) = sigma(lam) sigma_F(p)", sF(p.scale(lam)), sF(p).scale(apply_sigma(sigma, lam)), p=p, lam=lam)
        for _ in range(max(1, _cases(cfg, 500) // 10)):
            phi = Endo(alg, [random_poly(alg, rng, 2, 2) for _ in alg.names])
            conj = semi_conjugate(sF, phi)
            p = random_poly(alg, rng, max(1, top // 2), 2)
            run.equal("semi_conjugate", "(s phi s^{-1})(p) = s(phi(s^{-1}(p)))", conj(p), sF(phi(sF.inverse()(p))), phi=phi, p=p)
            rational = Endo(alg, [im.map_coefficients(lambda c: c.a) for im in phi.images])
            run.equal("rational_fixed", "s phi s^{-1} = phi for rational phi", semi_conjugate(sF, rational), rational, phi=rational)
        for g in alg.gens:
            run.equal("fixes_generators", "sigma_F(x) = x", sF(g), g, x=g)
        if top >= 2:
            c = bracket(alg.gens[0], alg.gens[1])
            run.equal("fixes_commutators", "sigma_F([x,y]) = [x,y]", sF(c), c, u=c)


def suite_diagonal(cfg: SuiteConfig, run: _Run) -> None:
    rng = _rng("diagonal", cfg)
    fld = _field(cfg)
    cap = cfg.max_degree or 4
    for n in _ranks(cfg, (2, 3)):
        alg = _alg(n, cap, fld)
        for _ in range(_cases(cfg, 100)):
            k = rng.choice((-1, 0, 1, 2))
            g1, g2 = _random_linear(alg, rng, True), _random_linear(alg, rng, True)
            tw = diagonal_twist(k, g1)
            h = det_character(g1, k)
            run.equal("pointwise", "h~(g)(x) = h(g) g(x)", list(tw.images), [im.scale(h) for im in g1.images], g=g1, k=k)
            run.equal("multiplicative", "h~(g1 g2) = h~(g1) h~(g2)", diagonal_twist(k, compose(g1, g2)), compose(tw, diagonal_twist(k, g2)), g1=g1, g2=g2, k=k)
        gens = alg.gens
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                g = swap(alg, i, j)
                run.equal("swap_involution", "g_xy^2 = e", compose(g, g), identity(alg), x=gens[i], y=gens[j])
                m = rng.choice((2, 3, -2, Fraction(1, 3)))
                cx = constant(alg, gens[i])
                run.equal("stretch_const", "g_my c_x = c_x", compose(stretch(alg, j, m), cx), cx, x=gens[i], y=gens[j], m=m)
                run.equal("shear_const", "g'_my c_x = c_x", compose(shear(alg, j, m, i), cx), cx, x=gens[i], y=gens[j], m=m)


def suite_rank2(cfg: SuiteConfig, run: _Run) -> None:
    rng = _rng("rank2", cfg)
    fld = _field(cfg)
    top = cfg.max_degree or 8
    one = generate_basis(1, top)
    for d, dim in enumerate(one.dimensions(), start=1):
        run.equal("rank1_dimension", "dim F(x)_d = [d == 1]", dim, 1 if d == 1 else 0, degree=d)
    alg = _alg(2, top, fld)
    phi = Endo.from_mapping(alg, {"x": "x+[x,y]"}) if top >= 2 else None
    if phi is not None:
        for c in range(1, top + 1):
            verdict = check_automorphism(phi, cap=c).verdict
            run.check("nonlinear_not_auto", "check_automorphism(x -> x+[x,y]) != yes", verdict != "yes", {"cap": c}, verdict, "no|inconclusive")
    for _ in range(_cases(cfg, 50)):
        a, b = fld(rng.choice((-3, -2, -1, 1, 2, 3))), fld(rng.choice((-3, -2, -1, 1, 2, 3)))
        f = alg.gen(0).scale(rng.choice((-2, -1, 0, 1, 2)))
        t = triangular(alg, [(a, alg.zero()), (b, f)])
        run.check("triangular_linear", "t is linear and triangular", t.is_linear() and t.is_triangular(), {"t": t}, t.is_linear(), True)
        verdict = check_automorphism(t).verdict
        run.equal("triangular_invertible", "check_automorphism(t) = yes", verdict, "yes", t=t)


def suite_duality(cfg: SuiteConfig, run: _Run) -> None:
    rng = _rng("duality", cfg)
    fld = _field(cfg)
    comp_deg = cfg.max_degree or 3
    point_deg = 2
    h = cat.default_h(comp_deg * point_deg * comp_deg, fld)
    ranks = _ranks(cfg, (1, 2, 3))
    names_x = lambda n: tuple(f"x{i + 1}" for i in range(n))  # noqa: E731
    names_y = lambda n: tuple(f"y{i + 1}" for i in range(n))  # noqa: E731
    names_z = lambda n: tuple(f"z{i + 1}" for i in range(n))  # noqa: E731
    for _ in range(_cases(cfg, 200)):
        n, m = rng.choice(ranks), rng.choice(ranks)
        X = FreeLieAlgebra(names_x(n), comp_deg, fld)
        Y = FreeLieAlgebra(names_y(m), comp_deg, fld)
        s = cat.random_morphism(Y, X, rng, comp_deg)
        nu = cat.random_point(X, h, rng, point_deg)
        lhs = cat.alpha(cat.tilde_map(s, nu))
        # independent route: evaluate in the associative envelope
        env_vals = [to_associative(v) for v in cat.alpha(nu)]
        rhs_env = [to_associative(w).substitute(env_vals) for w in s.images]
        run.equal("alpha_square", "alpha_Y s~ = s^alpha alpha_X", [to_associative(v) for v in lhs], rhs_env, s=s, nu=nu)
        run.equal("poly_map", "s^alpha(a) = alpha(s~(alpha^{-1}(a)))", cat.poly_map(s, nu.images, h), lhs, s=s, nu=nu)

        k = rng.choice(ranks)
        Z = FreeLieAlgebra(names_z(k), 1, fld)
        s2 = cat.random_morphism(Z, Y, rng, 1)
        nu1 = cat.random_point(X, h, rng, 1)
        lhs = cat.tilde_map(cat.compose(s, s2), nu1)
        rhs = cat.tilde_map(s2, cat.tilde_map(s, nu1))
        run.equal("contravariance", "(s1 s2)~ = s2~ s1~", lhs, rhs, s1=s, s2=s2, nu=nu1)

        x0 = FreeLieAlgebra(h.names, h.cap, fld)
        comps = cat.component_decompose(s, x0)
        run.check("decomposition", "s^alpha(a) = (pi s_1^alpha(a), ..., pi s_m^alpha(a))", cat.decomposition_holds(s, comps, nu.images), {"s": s, "a": nu}, None, None)

    sep_cases = _cases(cfg, 100)
    found = 0
    sep_rng = random.Random(f"liecat:duality-separation:{cfg.seed}")
    sep_ranks = [r for r in ranks if r <= 3] or [1]
    for _ in range(sep_cases):
        while True:
            n, m = sep_rng.choice(sep_ranks), sep_rng.choice(sep_ranks)
            X = FreeLieAlgebra(names_x(n), comp_deg, fld)
            Y = FreeLieAlgebra(names_y(m), comp_deg, fld)
            s1 = cat.random_morphism(Y, X, sep_rng, comp_deg)
            s2 = cat.random_morphism(Y, X, sep_rng, comp_deg)
            if s1 != s2:
                break
        res = cat.find_separating_point(s1, s2, budget=4, h=cat.default_h(1, fld))
        found += res.found
        run.check("separation", "s1 != s2 implies s1~ != s2~", res.found, {"s1": s1, "s2": s2}, res.note or res.point, "separating point")
    run.report.details["separated"] = f"{found}/{sep_cases}"

    X = FreeLieAlgebra(("x1", "x2"), 2, fld)
    Y = FreeLieAlgebra(("y",), 2, fld)
    s1 = cat.Morphism(Y, X, [X.parse("[x1,x2]")])
    s2 = cat.Morphism(Y, X, [X.zero()])
    res = cat.find_separating_point(s1, s2, budget=4, h=cat.rank_one(1, fld))
    run.check("rank1_no_duality", "H = F(x0): search exhausts without a point", not res.found, {"s1": s1, "s2": s2}, res.point, "NotFound")

    f0 = cat.rank_one(3, fld)
    f_xy = FreeLieAlgebra(("x", "y"), 3, fld)
    collapse = cat.nu0(f_xy, f0)
    eta = cat.Morphism.from_endo(swap(f_xy, "x", "y"))
    run.equal("nu0_swap", "nu0 eta = nu0", cat.compose(collapse, eta), collapse)
    w = X.parse("x1 + [x1,x2]")
    const = cat.compose(cat.nu_a(cat.rank_one(2, fld), w), cat.nu0(f_xy, cat.rank_one(2, fld)))
    run.equal("constant_values", "(nu_w nu0)(x) = w for every x", list(const.images), [w, w])
    ident = cat.nu_a(f0, f0.gens[0])
    run.equal("nu_x0", "nu_{x0} = identity", ident, cat.Morphism.identity(f0))
    fx = FreeLieAlgebra(("x1", "x2"), 1, fld)
    eps = cat.component_decompose(cat.Morphism.identity(fx), FreeLieAlgebra(h.names, 1, fld))
    run.equal("coordinate_constants", "identity decomposes into eps_i = nu_{x_i} nu0", [e.images for e in eps], [(g, g) for g in fx.gens])


def suite_matrix_iso(cfg: SuiteConfig, run: _Run) -> None:
    rng = _rng("matrix_iso", cfg)
    fld = _field(cfg)
    for n in _ranks(cfg, (2, 3, 4)):
        alg = _alg(n, cfg.max_degree or 1, fld)
        for _ in range(_cases(cfg, 200)):
            phi, psi = _random_linear(alg, rng), _random_linear(alg, rng)
            run.equal("product", "to_matrix(phi psi) = to_matrix(phi) to_matrix(psi)", to_matrix(compose(phi, psi)), to_matrix(phi) * to_matrix(psi), phi=phi, psi=psi)
            run.equal("bijection", "from_matrix(to_matrix(phi)) = phi", from_matrix(alg, to_matrix(phi)), phi, phi=phi)
        a = rng.choice(FHAT_SCALARS)
        run.equal("scalar_matrix", "f_a <-> a I", to_matrix(scalar(alg, a)), MatrixN.scalar(n, a, fld), n=n, a=a)
        run.equal("identity_matrix", "identity <-> I", to_matrix(identity(alg)), MatrixN.identity(n, fld), n=n)


SUITES: dict[str, Callable[[SuiteConfig, _Run], None]] = {
    "basis_dims": suite_basis_dims,
    "jacobi": suite_jacobi,
    "envelope": suite_envelope,
    "constants": suite_constants,
    "tau_scaling": suite_tau_scaling,
    "fhat": suite_fhat,
    "scalar_center": suite_scalar_center,
    "semi": suite_semi,
    "diagonal": suite_diagonal,
    "rank2": suite_rank2,
    "duality": suite_duality,
    "matrix_iso": suite_matrix_iso,
}


def run_suite(name: str, config: SuiteConfig | None = None) -> Report:
    config = config or SuiteConfig()
    try:
        body = SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    report = Report(suite=name, config=asdict(config))
    if config.cases != 0:
        body(config, _Run(report))
    return report


def run_all(config: SuiteConfig | None = None) -> list[Report]:
    """Run every suite; an exception inside one suite is recorded, not raised."""
    config = config or SuiteConfig()
    reports = []
    for name in SUITES:
        try:
            reports.append(run_suite(name, config))
        except (LiecatError, ArithmeticError, ValueError, AssertionError) as exc:
            rep = Report(suite=name, config=asdict(config))
            rep.error = f"{type(exc).__name__}: {exc}"
            reports.append(rep)
    return reports


def reports_json(reports: list[Report]) -> str:
    summary = {
        "verdict": "PASS" if all(r.verdict == "PASS" for r in reports) else "FAIL",
        "suites": {r.suite: r.verdict for r in reports},
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(summary, indent=2, ensure_ascii=False)
