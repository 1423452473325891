import pytest
from hypothesis import given
from hypothesis import strategies as st

from liecat.errors import CapacityExceeded, DegreeOverflow
from liecat.hall import (
    BasisTable,
    generate_basis,
    is_lyndon,
    lyndon_words,
    mobius,
    standard_factorization,
    witt_dimension,
)


def names(table, d):
    return [table.bracketing(h.index, ("x", "y", "z")) for h in table.by_degree[d - 1]]


def test_rank_one_is_one_dimensional():
    t = generate_basis(1, 3)
    assert t.dimensions() == [1, 0, 0]


def test_rank_two_low_degrees():
    t = generate_basis(2, 3)
    assert names(t, 1) == ["x", "y"]
    assert names(t, 2) == ["[x,y]"]
    assert names(t, 3) == ["[x,[x,y]]", "[[x,y],y]"]


def test_witt_values():
    assert witt_dimension(2, 1) == 2
    assert witt_dimension(2, 3) == 2
    assert witt_dimension(3, 4) == 18
    assert [mobius(k) for k in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]


@pytest.mark.parametrize("n,top", [(1, 6), (2, 8), (3, 5), (4, 4)])
def test_dimensions_match_witt(n, top):
    assert generate_basis(n, top).dimensions() == [witt_dimension(n, d) for d in range(1, top + 1)]


@given(st.integers(1, 3), st.integers(1, 7))
def test_lyndon_enumeration_is_exactly_the_lyndon_words(n, d):
    import itertools

    brute = sorted(w for w in itertools.product(range(n), repeat=d) if is_lyndon(w))
    assert sorted(w for w in lyndon_words(n, d) if len(w) == d) == brute


def test_standard_factorization():
    assert standard_factorization((0, 0, 1)) == ((0,), (0, 1))
    assert standard_factorization((0, 1, 1)) == ((0, 1), (1,))
    assert standard_factorization((0, 0, 1, 0, 1)) == ((0, 0, 1), (0, 1))


def test_brackets_of_letters():
    t = generate_basis(2, 4)
    x, y = t.index_of[(0,)], t.index_of[(1,)]
    xy = t.index_of[(0, 1)]
    assert t.bracket_words(x, x) == {}
    assert t.bracket_words(y, x) == {xy: -1}


def test_jacobi_rewrite_example():
    t = generate_basis(2, 4)
    lhs = t.bracket_words(t.index_of[(0, 0, 1)], t.index_of[(1,)])
    assert lhs == {t.index_of[(0, 0, 1, 1)]: 1}


def test_overflow_is_reported():
    t = generate_basis(2, 2)
    with pytest.raises(DegreeOverflow):
        t.bracket_words(t.index_of[(0, 1)], t.index_of[(0,)])


def test_capacity_limit(monkeypatch):
    monkeypatch.setenv("LIECAT_MAX_TABLE", "10")
    with pytest.raises(CapacityExceeded):
        BasisTable(2, 6)
