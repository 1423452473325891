from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liecat.errors import ShapeMismatch, Singular
from liecat.matrix import MatrixN
from liecat.scalar import Field

entries = st.integers(-4, 4)


def square(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n)


def test_det_and_inverse():
    m = MatrixN([[2, 1], [1, 1]])
    assert m.det() == 1
    assert m * m.inverse() == MatrixN.identity(2)
    assert MatrixN([[1, 2], [2, 4]]).det() == 0
    with pytest.raises(Singular):
        MatrixN([[1, 2], [2, 4]]).inverse()


def test_quadratic_entries(q2):
    m = MatrixN([[q2.sqrt, 1], [1, q2.sqrt]], q2)
    assert m.det() == 1
    assert m.inverse() * m == MatrixN.identity(2, q2)


def test_shape():
    with pytest.raises(ShapeMismatch):
        MatrixN([[1, 2]])


@given(square(3), square(3))
def test_det_is_multiplicative(a, b):
    a, b = MatrixN(a), MatrixN(b)
    assert (a * b).det() == a.det() * b.det()


@given(square(3))
def test_inverse_when_invertible(a):
    a = MatrixN(a)
    if a.is_invertible():
        assert a.inverse() * a == MatrixN.identity(3)
        assert a.inverse().det() == Fraction(1) / a.det()
