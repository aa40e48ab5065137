from __future__ import annotations

import pytest

from c4part import build, er_polarity, named_graph


@pytest.fixture(scope="session")
def triangle():
    return named_graph("triangle")


@pytest.fixture(scope="session")
def petersen():
    return named_graph("petersen")


@pytest.fixture(scope="session")
def heawood():
    return named_graph("heawood")


@pytest.fixture(scope="session")
def er2():
    return er_polarity(2)


@pytest.fixture(scope="session")
def er3():
    return er_polarity(3)


@pytest.fixture(scope="session")
def er5():
    return er_polarity(5)


@pytest.fixture(scope="session")
def er7():
    return er_polarity(7)


@pytest.fixture(scope="session")
def path3():
    return build(3, [(0, 1), (1, 2)])
