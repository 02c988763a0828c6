import pytest

from schuprod import cartan_matrix_by_name


@pytest.fixture(scope="session")
def g2():
    return cartan_matrix_by_name("G2")


@pytest.fixture(scope="session")
def a1():
    return cartan_matrix_by_name("A1")


@pytest.fixture(scope="session")
def a2():
    return cartan_matrix_by_name("A2")


@pytest.fixture(scope="session")
def a3():
    return cartan_matrix_by_name("A3")


@pytest.fixture(scope="session")
def b2():
    return cartan_matrix_by_name("B2")
