import pytest

from ucsieve import builtin_instance


@pytest.fixture(scope="session")
def uc3():
    return builtin_instance("uc3")


@pytest.fixture(scope="session")
def uc10():
    return builtin_instance("uc10")


@pytest.fixture(scope="session")
def uc26():
    return builtin_instance("uc26")
