import pytest

from sympgv import Field


@pytest.fixture(scope="session")
def gf2():
    return Field(2)


@pytest.fixture(scope="session")
def gf3():
    return Field(3)


@pytest.fixture(scope="session")
def gf4():
    return Field(2, 2)


@pytest.fixture(scope="session")
def gf5():
    return Field(5)
