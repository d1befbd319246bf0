"""Shared fixtures for graphex-sim tests.

Every random quantity in the suite comes from a fixed-seed Philox stream, so
each test sees the same numbers on every run and under any thread count.

Fixtures:
- rng: fresh seeded generator per test
- runner: single-threaded ReplicateRunner
- reference_degrees: 50 hubs of degree 100 plus 5000 leaves (l_n = 10000)
- isolated_settings: global settings restored after the test
"""

import numpy as np
import pytest
from dotenv import load_dotenv

from graphex_sim.config import settings
from graphex_sim.rng import seeded
from graphex_sim.services.runner import ReplicateRunner

from tests.factories import SequenceFactory

# Load environment variables
load_dotenv()


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator; identical for every test that requests it."""
    return seeded(20240611)


@pytest.fixture
def runner() -> ReplicateRunner:
    """Single-threaded replicate runner."""
    return ReplicateRunner(threads=1)


@pytest.fixture
def reference_degrees() -> np.ndarray:
    """Hub-and-leaf degree sequence with l_n = 10000."""
    return SequenceFactory.reference()


@pytest.fixture
def isolated_settings():
    """Snapshot the global settings and restore them after the test."""
    saved = settings.model_dump()
    yield settings
    for name, value in saved.items():
        setattr(settings, name, value)
