import os

# Must be set before app.core.config builds the settings singleton.
os.environ.setdefault("FASTHAAR_ENVIRONMENT", "test")

import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def signal_corpus():
    """Seeded random even-length signals with lengths in {2, 4, ..., 4096}."""
    gen = np.random.default_rng(7)
    lengths = 2 * gen.integers(1, 2049, size=1000)
    scales = 10.0 ** gen.uniform(-3, 3, size=1000)
    return [gen.uniform(-1.0, 1.0, size=int(n)) * s for n, s in zip(lengths, scales)]
