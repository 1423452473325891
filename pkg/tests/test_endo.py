import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecat.endo import (
    Endo,
    SemiMorphism,
    check_automorphism,
    compose,
    constant,
    diagonal,
    diagonal_twist,
    from_matrix,
    identity,
    inner_conjugate,
    make_family,
    make_sigma_F,
    parse_map,
    scalar,
    semi_conjugate,
    shear,
    stretch,
    swap,
    to_matrix,
    triangular,
)
from liecat.errors import BadSpec, NotLinear, ZeroScale
from liecat.liepoly import FreeLieAlgebra, bracket, random_poly
from liecat.matrix import MatrixN
from liecat.scalar import Field, FieldAut


def test_apply_and_constants(f2):
    phi = Endo.from_mapping(f2, {"x": "[x,y]"})
    assert phi(f2.parse("x")) == f2.parse("[x,y]")
    u = f2.parse("x - 2*[x,[x,y]]")
    cu = constant(f2, u)
    assert cu(f2.gen("x")) == cu(f2.gen("y")) == u
    assert identity(f2)(u) == u


def test_constant_identities(f2):
    phi = Endo.from_mapping(f2, {"x": "x+[x,y]", "y": "[x,y]"})
    p = f2.parse("y + [x,y]")
    x = f2.gen("x")
    assert compose(phi, constant(f2, x)) == constant(f2, phi(x))
    assert compose(constant(f2, p), constant(f2, x)) == constant(f2, p)
    assert compose(constant(f2, p), swap(f2, "x", "y")) == constant(f2, p)


def test_families(f2):
    g = swap(f2, "x", "y")
    assert compose(g, g) == identity(f2)
    t = diagonal(f2, 2, 3)
    assert t(f2.parse("[x,y]")) == f2.parse("6*[x,y]")
    cx = constant(f2, "x")
    assert compose(stretch(f2, "y", 5), cx) == cx
    assert compose(shear(f2, "y", 5, "x"), cx) == cx
    assert shear(f2, "y", 2)["y"] == f2.parse("2*y + x")
    with pytest.raises(ZeroScale):
        scalar(f2, 0)
    with pytest.raises(BadSpec):
        triangular(f2, [(1, "y"), (1, "x")])
    assert make_family("diag", f2, 2, 3) == t


def test_matrix_correspondence(f2):
    assert to_matrix(identity(f2)) == MatrixN.identity(2)
    assert to_matrix(scalar(f2, Fraction(3, 2))) == MatrixN.scalar(2, Fraction(3, 2))
    with pytest.raises(NotLinear):
        to_matrix(Endo.from_mapping(f2, {"x": "[x,y]"}))


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=8, max_size=8))
def test_matrix_product(vals):
    alg = FreeLieAlgebra(("x", "y"), 1)
    a = from_matrix(alg, MatrixN([vals[:2], vals[2:4]]))
    b = from_matrix(alg, MatrixN([vals[4:6], vals[6:]]))
    assert to_matrix(compose(a, b)) == to_matrix(a) * to_matrix(b)
    assert from_matrix(alg, to_matrix(a)) == a


@pytest.mark.parametrize("a", [2, 3, -1, Fraction(1, 2)])
def test_inner_conjugate_examples(a):
    f3 = FreeLieAlgebra(("x", "y", "z"), 4)
    res = inner_conjugate(a, Endo.from_mapping(f3, {"x": "x+[y,z]"}))
    assert res["x"] == f3.parse("x") + f3.parse("[y,z]").scale(a)
    f2 = FreeLieAlgebra(("x", "y"), 4)
    assert inner_conjugate(a, Endo.from_mapping(f2, {"x": "[x,y]"}))["x"] == f2.parse("[x,y]").scale(a)
    lin = Endo.from_mapping(f2, {"x": "2*x - y", "y": "x"})
    assert inner_conjugate(a, lin) == lin


def test_semi_automorphism(q2):
    alg = FreeLieAlgebra(("x", "y"), 4, q2)
    sF = make_sigma_F(FieldAut.conjugation(q2), alg)
    xy = alg.parse("[x,y]")
    assert sF(xy) == xy
    assert sF(alg.parse("w*x")) == alg.parse("-w*x")
    ident = make_sigma_F(FieldAut.identity(), alg)
    p = alg.parse("(1)+(2)*w*[x,[x,y]] - w*y")
    assert ident(p) == p
    phi = Endo.from_mapping(alg, {"x": "w*[x,y]"})
    assert semi_conjugate(sF, phi)["x"] == alg.parse("-w*[x,y]")
    assert semi_conjugate(ident, phi) == phi
    rational = Endo.from_mapping(alg, {"x": "x + 2*[x,y]", "y": "-y"})
    assert semi_conjugate(sF, rational) == rational
    assert isinstance(sF.inverse(), SemiMorphism)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6))
def test_sigma_F_is_semilinear_bracket_map(seed):
    fld = Field(2)
    alg = FreeLieAlgebra(("x", "y"), 6, fld)
    rng = random.Random(seed)
    p, q = random_poly(alg, rng, 3), random_poly(alg, rng, 3)
    sF = make_sigma_F(FieldAut.conjugation(fld), alg)
    lam = fld(rng.randint(-3, 3), rng.randint(-3, 3))
    assert sF(p + q) == sF(p) + sF(q)
    assert sF(bracket(p, q)) == bracket(sF(p), sF(q))
    assert sF(p.scale(lam)) == sF(p).scale(lam.conjugate())


def test_diagonal_twist(f2):
    g = diagonal(f2, 2, 3)
    assert diagonal_twist(0, g) == g
    assert diagonal_twist(1, g)["x"] == f2.parse("12*x")
    assert diagonal_twist(3, identity(f2)) == identity(f2)


def test_check_automorphism(f2, f3):
    assert check_automorphism(swap(f2, "x", "y")).verdict == "yes"
    assert check_automorphism(constant(f2, "x")).verdict == "no"
    res = check_automorphism(Endo.from_mapping(f3, {"x": "x+[y,z]"}))
    assert res.verdict == "yes"
    assert res.witness["x"] == f3.parse("x - [y,z]")
    lin = from_matrix(f2, MatrixN([[2, 1], [1, 1]]))
    assert check_automorphism(lin).witness == from_matrix(f2, MatrixN([[1, -1], [-1, 2]]))


@pytest.mark.parametrize("cap", range(1, 9))
def test_nonlinear_rank_two_never_invertible(cap):
    alg = FreeLieAlgebra(("x", "y"), 8)
    phi = Endo.from_mapping(alg, {"x": "x+[x,y]"})
    assert check_automorphism(phi, cap=cap).verdict in ("no", "inconclusive")


def test_parse_map(f2):
    assert parse_map("x=>[x,y]; y=>y", f2) == [f2.parse("[x,y]"), f2.gen("y")]
    with pytest.raises(BadSpec):
        parse_map("x=>y; x=>x", f2)
    with pytest.raises(BadSpec):
        parse_map("q=>y", f2)
