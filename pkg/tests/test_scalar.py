from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liecat.errors import DivisionByZero, FieldMismatch
from liecat.scalar import (
    Field,
    FieldAut,
    Scalar,
    apply_sigma,
    field_arithmetic,
    format_scalar,
    in_prime_subfield,
)

fractions = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 100)


def test_rational_add():
    assert field_arithmetic("add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)


def test_quadratic_norm_product(q2):
    a, b = q2(1, 1), q2(1, -1)
    assert field_arithmetic("mul", a, b) == -1


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        field_arithmetic("inv", 0)
    with pytest.raises(ZeroDivisionError):
        Scalar(0) / Scalar(0)


def test_conjugation(q2):
    conj = FieldAut.conjugation(q2)
    assert apply_sigma(conj, q2(1, 1)) == q2(1, -1)
    assert apply_sigma(conj, Fraction(3, 2)) == Fraction(3, 2)
    assert apply_sigma(FieldAut.identity(), q2(5, 7)) == q2(5, 7)


def test_conjugation_needs_quadratic_field():
    with pytest.raises(FieldMismatch):
        FieldAut.conjugation(Field())


def test_prime_subfield(q2):
    assert in_prime_subfield(Fraction(7, 3))
    assert not in_prime_subfield(q2.sqrt)
    assert in_prime_subfield(0)


def test_mixed_fields_rejected():
    with pytest.raises(FieldMismatch):
        Field(2).sqrt + Field(3).sqrt


def test_field_parse():
    assert Field.parse("q") == Field()
    assert Field.parse("q-sqrt:2") == Field(2)
    assert str(Field(-1)) == "q-sqrt:-1"
    for bad in ("q-sqrt:4", "q-sqrt:1", "r"):
        with pytest.raises(ValueError):
            Field.parse(bad)


def test_rational_hash_matches_fraction():
    assert hash(Scalar(Fraction(3, 4))) == hash(Fraction(3, 4))
    assert {Scalar(2): 1}[2] == 1


def test_format(q2):
    assert format_scalar(q2(Fraction(1, 2), 3)) == "(1/2)+(3)*w"
    assert format_scalar(q2.sqrt) == "w"
    assert format_scalar(Scalar(Fraction(-2, 3))) == "-2/3"


@given(fractions, fractions, fractions, fractions)
def test_quadratic_field_axioms(a, b, c, d):
    f = Field(5)
    x, y = f(a, b), f(c, d)
    assert x * y == y * x
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x * x.conjugate()).is_rational
