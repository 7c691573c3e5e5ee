import pytest

from weylcells import build_root_system, cells_stabilized


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A", 2)


@pytest.fixture(scope="session")
def c2():
    return build_root_system("C", 2)


@pytest.fixture(scope="session")
def g2():
    return build_root_system("G", 2)


@pytest.fixture(scope="session")
def a2_dec(a2):
    return cells_stabilized(a2, 10, 12)


@pytest.fixture(scope="session")
def c2_dec(c2):
    return cells_stabilized(c2, 10, 12)


@pytest.fixture(scope="session")
def g2_dec(g2):
    return cells_stabilized(g2, 10, 12)
