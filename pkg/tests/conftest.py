import pytest
from hypothesis import HealthCheck, settings

from lsalgebra import fixtures

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def i24():
    return fixtures.i24()


@pytest.fixture
def chain121():
    return fixtures.chain_121()


@pytest.fixture
def chain12():
    return fixtures.chain_12()


@pytest.fixture
def a1():
    return fixtures.a1_bond3()


ALL_FIXTURES = sorted(fixtures.FIXTURES)
