import numpy as np
import pytest

from korenblum import ConstantWeight, StandardWeight, StepWeight


@pytest.fixture(scope="session")
def fixture_weights():
    """The three reference weights used throughout the suite."""
    return (ConstantWeight(1.0), StandardWeight(1.0), StepWeight(0.5))


@pytest.fixture
def rng():
    return np.random.default_rng(20240405)
