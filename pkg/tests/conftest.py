import numpy as np
import pytest

from zetaline.zeros import scan_zeros


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(987654321)


@pytest.fixture(scope="session")
def scan_100():
    return scan_zeros(100.0)


@pytest.fixture(scope="session")
def scan_1000():
    return scan_zeros(1000.0)
