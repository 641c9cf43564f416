import pytest

from halidon import HalidonRing


@pytest.fixture(scope="session")
def z25():
    return HalidonRing(25, 4, 7)


@pytest.fixture(scope="session")
def z49():
    return HalidonRing(49, 6, 19)


@pytest.fixture(scope="session")
def z65():
    return HalidonRing(65, 4, 8)


@pytest.fixture(scope="session")
def z121():
    return HalidonRing(121, 10, 94)


@pytest.fixture(scope="session")
def z5():
    return HalidonRing(5, 4, 2)


@pytest.fixture(scope="session")
def z3():
    return HalidonRing(3, 2, 2)
