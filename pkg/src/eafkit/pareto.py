"""Pareto dominance relations and nondominated-set extraction.

Objective vectors are minimized componentwise. A point is a 1D float vector
of length M; a point set is an (N, M) array. NaN values are rejected up
front because dominance is undefined under NaN; +/-inf coordinates are legal
(they appear as sentinels in derived attainment surfaces).

Comparisons are exact. Epsilon policies, if needed, belong to callers.
"""

from __future__ import annotations

import math
from typing import Iterable

import numpy as np

from .errors import DataError, ValidationError

__all__ = [
    "as_point",
    "as_point_set",
    "weakly_dominates",
    "dominates",
    "set_attains",
    "nondominated_filter",
]


def as_point(values: Iterable[float]) -> np.ndarray:
    """Coerce to a 1D float vector, rejecting NaN and empty input."""
    point = np.asarray(values, dtype=float)
    if point.ndim != 1 or point.size == 0:
        raise ValidationError(
            f"objective point must be a nonempty 1D vector, got shape {point.shape}"
        )
    if np.isnan(point).any():
        raise DataError("objective point contains NaN")
    return point


def as_point_set(points, m: int | None = None) -> np.ndarray:
    """Coerce to an (N, M) float array of objective vectors.

    ``m`` fixes the expected dimensionality; it is also what gives an empty
    input a definite shape. NaN anywhere is rejected.
    """
    try:
        arr = np.asarray(points, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"point set is ragged or non-numeric: {exc}") from None
    if arr.size == 0:
        arr = arr.reshape(0, m if m is not None else 0)
    if arr.ndim != 2:
        raise ValidationError(f"point set must be a 2D array, got shape {arr.shape}")
    if m is not None and arr.shape[1] != m:
        raise ValidationError(
            f"dimension mismatch: expected {m} objectives, got {arr.shape[1]}"
        )
    if np.isnan(arr).any():
        raise DataError("point set contains NaN")
    return arr


def _check_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape[0] != b.shape[0]:
        raise ValidationError(
            f"dimension mismatch: {a.shape[0]} vs {b.shape[0]} objectives"
        )


def weakly_dominates(a, b) -> bool:
    """True iff ``a`` is at least as good as ``b`` in every objective."""
    pa, pb = as_point(a), as_point(b)
    _check_same_dim(pa, pb)
    return bool(np.all(pa <= pb))


def dominates(a, b) -> bool:
    """True iff ``a`` weakly dominates ``b`` and is strictly better somewhere."""
    pa, pb = as_point(a), as_point(b)
    _check_same_dim(pa, pb)
    return bool(np.all(pa <= pb) and np.any(pa < pb))


def set_attains(front, y) -> bool:
    """True iff some point of ``front`` weakly dominates ``y``.

    An empty front attains nothing (vacuously false).
    """
    py = as_point(y)
    pts = as_point_set(front, m=py.shape[0])
    if pts.shape[0] == 0:
        return False
    return bool(np.all(pts <= py, axis=1).any())


def nondominated_filter(points, m: int | None = None) -> np.ndarray:
    """Extract the nondominated subset of a finite point set.

    Exact duplicates collapse to a single representative. For M = 2 a
    sort-based sweep runs in O(N log N) and returns points sorted ascending
    in the first objective; other dimensionalities use an O(N^2) pairwise
    filter whose output is sorted lexicographically (identical sets and,
    for M = 2, identical order).
    """
    pts = as_point_set(points, m=m)
    if pts.shape[0] == 0:
        return pts
    if pts.shape[1] == 2:
        return _filter_sorted_2d(pts)
    return _filter_pairwise(pts)


def _filter_sorted_2d(pts: np.ndarray) -> np.ndarray:
    """Sweep in (y1, y2) order keeping strict improvements in y2."""
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    keep: list[int] = []
    best = math.inf
    for i in order:
        y2 = pts[i, 1]
        # First point always survives; afterwards a point is nondominated
        # iff it strictly improves the best second objective seen so far.
        if not keep or y2 < best:
            keep.append(int(i))
            best = y2
    return pts[keep]


def _filter_pairwise(pts: np.ndarray) -> np.ndarray:
    """Dedupe, then drop every point strictly dominated by another."""
    uniq = np.unique(pts, axis=0)
    a = uniq[:, None, :]
    b = uniq[None, :, :]
    dominates_pair = np.all(a <= b, axis=2) & np.any(a < b, axis=2)  # [i, j]: i dominates j
    keep = ~dominates_pair.any(axis=0)
    return uniq[keep]
