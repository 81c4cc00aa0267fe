import pytest

from snhecke.hecke import HeckeAlgebra


@pytest.fixture(scope="session")
def A4():
    A = HeckeAlgebra(4)
    A.prebuild()
    return A


@pytest.fixture(scope="session")
def A5():
    A = HeckeAlgebra(5)
    A.prebuild()
    return A


@pytest.fixture(scope="session")
def A6():
    A = HeckeAlgebra(6)
    A.prebuild()
    return A


@pytest.fixture(scope="session")
def A7():
    A = HeckeAlgebra(7)
    A.prebuild()
    return A
