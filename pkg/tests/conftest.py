import pytest

from octobohr import build_corpus


@pytest.fixture(scope="session")
def unit_corpus():
    return build_corpus("unit-ball", 100, 7)


@pytest.fixture(scope="session")
def half_corpus():
    return build_corpus("halfspace", 100, 7)
