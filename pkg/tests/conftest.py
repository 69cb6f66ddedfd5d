import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


def random_run_tensor(rng, s=None, n=None, lattice=None):
    """Random (S, N, 2) tensor; integer lattice values when requested."""
    s = s if s is not None else int(rng.integers(1, 6))
    n = n if n is not None else int(rng.integers(1, 9))
    if lattice is not None:
        return rng.integers(0, lattice + 1, size=(s, n, 2)).astype(float)
    return rng.uniform(-20.0, 20.0, size=(s, n, 2))
