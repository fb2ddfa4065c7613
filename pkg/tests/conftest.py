import os

import hypothesis
import numpy as np
import pytest
from hypothesis import strategies as st

from core.config import settings
from models.schemas import Grid
from services.reference_data import PUBLISHED_MATRICES

hypothesis.settings.register_profile("fast", max_examples=20)
hypothesis.settings.register_profile("thorough", max_examples=500)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "fast"))


@st.composite
def permutation_grids(draw, min_n: int = 1, max_n: int = 8):
    """Random arrangements of 1..n^2."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    entries = draw(st.permutations(list(range(1, n * n + 1))))
    return Grid(n=n, entries=tuple(entries))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def published():
    """Published search matrices keyed by n."""
    return {n: Grid.from_rows(rows) for n, rows in PUBLISHED_MATRICES.items()}


@pytest.fixture
def debug_mode(monkeypatch):
    """Re-verify the incremental objective after every accepted move."""
    monkeypatch.setattr(settings, "debug", True)
    yield


@pytest.fixture
def single_worker(monkeypatch):
    monkeypatch.setattr(settings, "threads", 1)
    yield
