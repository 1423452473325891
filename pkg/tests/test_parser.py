import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecat.errors import ExprSyntaxError, FieldMismatch, UnknownGenerator
from liecat.liepoly import FreeLieAlgebra, format_expr, random_poly, terms_json
from liecat.parser import parse_expr, parse_scalar
from liecat.scalar import Field


def test_examples(f2):
    assert parse_expr("[x,y]", f2) == f2.basis(f2.word_index("xy"))
    assert parse_expr("[y,x] + [x,y]", f2) == 0
    assert parse_expr("2*[x,[x,y]] - [x,[x,y]]", f2) == parse_expr("[x,[x,y]]", f2)


def test_format(f2):
    assert format_expr(parse_expr("3*[x,y] - x/2", f2)) == "-1/2*x + 3*[x,y]"
    assert format_expr(f2.zero()) == "0"
    q = FreeLieAlgebra(("x", "y"), 4, Field(2))
    assert format_expr(parse_expr("(1/2)+(3)*w*[x,y]", q)) == "(1/2+3*w)*[x,y]"
    assert format_expr(parse_expr("-w*x", q)) == "-w*x"


def test_scalars(q2):
    assert parse_scalar("(1/2)+(3)*w", q2) == q2("1/2", 3)
    assert parse_scalar("-3/4", Field()) == parse_scalar("-(6/8)", Field())


@pytest.mark.parametrize(
    "text,pos",
    [("[x,y", 4), ("x +", 3), ("x $ y", 2), ("", 0), ("x y", 2), ("[x,y]*[x,y]", 5)],
)
def test_syntax_errors_carry_position(f2, text, pos):
    with pytest.raises(ExprSyntaxError) as info:
        parse_expr(text, f2)
    assert info.value.pos == pos
    assert f"position {pos}" in str(info.value)


def test_other_errors(f2):
    with pytest.raises(UnknownGenerator, match="position 2"):
        parse_expr("x+q", f2)
    with pytest.raises(FieldMismatch):
        parse_expr("w*x", f2)
    with pytest.raises(ExprSyntaxError):
        parse_expr("1 + x", f2)


def test_terms_json(f2):
    assert terms_json(parse_expr("2*[x,y]", f2)) == [{"word": ["x", "y"], "bracketing": "[x,y]", "coeff": "2"}]


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([None, 2, -1]))
def test_round_trip(seed, d):
    alg = FreeLieAlgebra(("x", "y", "z"), 5, Field(d))
    p = random_poly(alg, random.Random(seed), 5, 4)
    assert parse_expr(format_expr(p), alg) == p
