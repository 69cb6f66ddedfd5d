"""Synthetic bi-objective runs for demos and pipeline tests.

Each run draws its decision vectors uniformly from [-5, 5]^dim and scores
them with a convex pair with a known trade-off curve:

    f1(x) = sum_d x_d^2          (minimum at the origin)
    f2(x) = sum_d (x_d - 2)^2    (minimum at (2, ..., 2))

Randomness comes from numpy's default 64-bit seeded generator (PCG64), so
one seed gives the same archive on every platform.
"""

from __future__ import annotations

import operator

import numpy as np

from .dataio import RunArchive
from .errors import ValidationError

__all__ = ["synthetic_runs"]


def synthetic_runs(
    seed: int = 0,
    n_runs: int = 50,
    n_samples: int = 20,
    dim: int = 3,
) -> RunArchive:
    """Random-search archive of shape (n_runs, n_samples, 2)."""
    try:
        seed = operator.index(seed)
        sizes = {k: operator.index(v) for k, v in
                 (("n_runs", n_runs), ("n_samples", n_samples), ("dim", dim))}
    except TypeError:
        raise ValidationError("seed and sizes must be integers") from None
    if seed < 0:
        raise ValidationError(f"seed must be nonnegative, got {seed}")
    for name, value in sizes.items():
        if value < 1:
            raise ValidationError(f"{name} must be positive, got {value}")
    rng = np.random.default_rng(seed)
    x = rng.uniform(-5.0, 5.0, size=(sizes["n_runs"], sizes["n_samples"], sizes["dim"]))
    costs = np.stack([np.sum(x**2, axis=2), np.sum((x - 2.0) ** 2, axis=2)], axis=2)
    return RunArchive(
        costs=costs,
        metadata={
            "generator": "numpy-pcg64",
            "seed": str(seed),
            "dim": str(sizes["dim"]),
            "objective_1": "sum of squares around 0",
            "objective_2": "sum of squares around 2",
        },
    )
