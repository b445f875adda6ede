import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from DiskGeometry.lattice import build_lattice  # noqa: E402
from DiskRep.config import Config  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(Config.DEFAULT_SEED)


@pytest.fixture(scope='session')
def small_lattice():
    return build_lattice(0.5, 0.9)


@pytest.fixture(scope='session')
def lattice_03():
    return build_lattice(0.3, 0.99)


@pytest.fixture
def disk_points(rng):
    radius = 0.95 * np.sqrt(rng.random(200))
    return radius * np.exp(2j * np.pi * rng.random(200))
