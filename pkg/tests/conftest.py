import pytest

from logicrel.formula import Universe


@pytest.fixture
def u_pq():
    return Universe(("p", "q"))


@pytest.fixture
def u_pqr():
    return Universe(("p", "q", "r"))
