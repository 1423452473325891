import pytest

from liecat.liepoly import FreeLieAlgebra
from liecat.scalar import Field


@pytest.fixture
def f2():
    return FreeLieAlgebra(("x", "y"), 6)


@pytest.fixture
def f3():
    return FreeLieAlgebra(("x", "y", "z"), 5)


@pytest.fixture
def q2():
    return Field(2)
