import numpy as np
import pytest

from liewb import _globals


@pytest.fixture
def rng():
    return np.random.default_rng(_globals.DEFAULT_SEED)


@pytest.fixture
def small_budget(monkeypatch):
    """Shrink the tensor-space budget so over-budget paths are cheap to reach."""
    monkeypatch.setattr(_globals, "BUDGET", 64)
    return 64
