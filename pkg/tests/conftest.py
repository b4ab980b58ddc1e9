import pytest

from slq2calc.fixtures import FixtureSet


@pytest.fixture(scope="session")
def fixtures():
    return FixtureSet()


@pytest.fixture(scope="session")
def models(fixtures):
    """One fully built model per calculus, shared across test modules."""
    from slq2calc.verify import build_model
    return {name: build_model(fixtures.calculus(name))
            for name in fixtures.calculus_names()}
