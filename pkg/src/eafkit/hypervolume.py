"""2D hypervolume, normalization, and hypervolume-over-evaluations traces.

Hypervolume is the area of the region strictly dominated by a front and
strictly dominating the reference point, computed exactly by rectangle
decomposition of the staircase. Traces accumulate that area over the
evaluation prefix of each run; cross-run center and uncertainty bands
summarize the variability over random seeds.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._threads import map_ordered
from .attainment import TransformSpec, apply_transform, as_run_tensor
from .errors import DataError, ValidationError
from .pareto import as_point, as_point_set, nondominated_filter

__all__ = [
    "ClippedPointsWarning",
    "HvConfig",
    "HvTraceSet",
    "hypervolume_2d",
    "normalized_hypervolume_2d",
    "hv_over_time",
]

BAND_MODES = ("stderr", "stddev")


class ClippedPointsWarning(UserWarning):
    """Points outside the reference box were dropped from a hypervolume."""


def _check_ref(ref) -> np.ndarray:
    point = as_point(ref)
    if point.shape[0] != 2:
        raise ValidationError(f"reference point must be 2D, got {point.shape[0]} values")
    if not np.isfinite(point).all():
        raise ValidationError(f"reference point must be finite, got {point.tolist()}")
    return point


def _clip_to_reference(front: np.ndarray, ref: np.ndarray) -> tuple[np.ndarray, int]:
    """Drop points that do not strictly dominate the reference point."""
    if front.shape[0] == 0:
        return front, 0
    inside = np.all(front <= ref, axis=1) & np.any(front < ref, axis=1)
    return front[inside], int((~inside).sum())


def _rectangle_area(front: np.ndarray, ref: np.ndarray) -> float:
    """Exact staircase area; expects a clipped, sorted, nondominated front."""
    if front.shape[0] == 0:
        return 0.0
    widths = ref[0] - front[:, 0]
    upper = np.concatenate(([ref[1]], front[:-1, 1]))
    return float(np.sum(widths * (upper - front[:, 1])))


def hypervolume_2d(front, ref) -> float:
    """Area dominated by ``front`` and dominating the reference point.

    The front may arrive unsorted; dominated or duplicate points are
    ignored (they cannot change the dominated region). Points that do not
    strictly dominate the reference point contribute zero area and trigger
    a :class:`ClippedPointsWarning`.
    """
    ref_pt = _check_ref(ref)
    pts = nondominated_filter(as_point_set(front, m=2))
    pts, n_clipped = _clip_to_reference(pts, ref_pt)
    if n_clipped:
        warnings.warn(
            f"{n_clipped} front point(s) do not strictly dominate the reference "
            f"point {ref_pt.tolist()} and contribute zero hypervolume",
            ClippedPointsWarning,
            stacklevel=2,
        )
    if pts.shape[0] == 0:
        if not n_clipped:
            warnings.warn(
                "hypervolume of an empty front is 0",
                ClippedPointsWarning,
                stacklevel=2,
            )
        return 0.0
    return _rectangle_area(pts, ref_pt)


@dataclass(frozen=True)
class HvConfig:
    """Reference point, optional true front, and orientation for HV work.

    The true Pareto front, when given, must be a nonempty nondominated set;
    it supplies the per-objective lower bounds used by normalization. All
    fields are stated in the caller's sign convention and reoriented
    internally via ``transform``.
    """

    ref_point: np.ndarray
    true_pareto_front: np.ndarray | None = None
    transform: TransformSpec = field(default_factory=TransformSpec)

    def __post_init__(self) -> None:
        object.__setattr__(self, "ref_point", _check_ref(self.ref_point))
        self.ref_point.setflags(write=False)
        if self.true_pareto_front is not None:
            pts = as_point_set(self.true_pareto_front, m=2)
            if pts.shape[0] == 0:
                raise ValidationError("true Pareto front must be nonempty")
            if not np.isfinite(pts).all():
                raise DataError("true Pareto front must be finite")
            filtered = nondominated_filter(pts)
            if filtered.shape[0] != np.unique(pts, axis=0).shape[0]:
                raise ValidationError("true Pareto front contains dominated points")
            object.__setattr__(self, "true_pareto_front", filtered)
            filtered.setflags(write=False)


def _oriented(points: np.ndarray, transform: TransformSpec) -> np.ndarray:
    out = np.array(points, dtype=float, copy=True)
    idx = sorted(i for i in transform.maximize_indices if i < out.shape[-1])
    if idx:
        out[..., idx] = -out[..., idx]
    return out


def _normalization_bounds(config: HvConfig) -> tuple[np.ndarray, np.ndarray]:
    """(lower, span) per objective, in the canonical orientation."""
    if config.true_pareto_front is None:
        raise ValidationError("normalized hypervolume requires the true Pareto front")
    ref = _oriented(config.ref_point, config.transform)
    lower = _oriented(config.true_pareto_front, config.transform).min(axis=0)
    span = ref - lower
    if np.any(span <= 0):
        m = int(np.argwhere(span <= 0)[0, 0])
        raise ValidationError(
            f"degenerate normalization range in objective {m}: the reference point "
            f"must be strictly worse than the true front's minimum (hypervolume is "
            f"hypersensitive to the reference point when an objective's range collapses)"
        )
    return lower, span


def normalized_hypervolume_2d(front, config: HvConfig) -> float:
    """Hypervolume after mapping true-front minima to 0 and the ref to 1.

    Each objective is affinely rescaled so the true front's minimum maps to
    0 and the reference point maps to 1; the result is the plain 2D
    hypervolume of the mapped front against the reference (1, 1).
    """
    lower, span = _normalization_bounds(config)
    pts = _oriented(as_point_set(front, m=2), config.transform)
    mapped = (pts - lower) / span
    return hypervolume_2d(mapped, np.ones(2))


@dataclass(frozen=True)
class HvTraceSet:
    """Per-run hypervolume-over-evaluations curves plus band statistics.

    ``traces[s, n]`` is the hypervolume of run s after its first n+1
    evaluations, so every trace is nondecreasing. ``center`` is the mean
    across runs; ``band_halfwidth`` is the uncertainty half-width
    (standard error by default) and is everywhere nonnegative.
    """

    traces: np.ndarray
    center: np.ndarray
    band_halfwidth: np.ndarray

    def __post_init__(self) -> None:
        traces = np.array(self.traces, dtype=float, copy=True)
        center = np.array(self.center, dtype=float, copy=True)
        half = np.array(self.band_halfwidth, dtype=float, copy=True)
        if traces.ndim != 2 or min(traces.shape) < 1:
            raise ValidationError(f"traces must be a nonempty (S, N) array, got {traces.shape}")
        n = traces.shape[1]
        if center.shape != (n,) or half.shape != (n,):
            raise ValidationError(
                f"center/band_halfwidth must have length {n}, "
                f"got {center.shape} and {half.shape}"
            )
        if np.isnan(traces).any() or np.isnan(center).any() or np.isnan(half).any():
            raise DataError("hypervolume traces contain NaN")
        if np.any(np.diff(traces, axis=1) < 0):
            raise ValidationError("hypervolume traces must be nondecreasing")
        if np.any(half < 0):
            raise ValidationError("band halfwidth must be nonnegative")
        for name, arr in (("traces", traces), ("center", center), ("band_halfwidth", half)):
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def n_runs(self) -> int:
        return self.traces.shape[0]

    @property
    def n_steps(self) -> int:
        return self.traces.shape[1]


def _prefix_front_areas(run: np.ndarray, ref: np.ndarray) -> np.ndarray:
    """Hypervolume of each evaluation prefix of a single run."""
    areas = np.empty(run.shape[0])
    front = np.empty((0, 2))
    area = 0.0
    for n in range(run.shape[0]):
        grown = nondominated_filter(np.vstack([front, run[n : n + 1]]))
        if grown.shape[0] != front.shape[0] or not np.array_equal(grown, front):
            front = grown
            clipped, _ = _clip_to_reference(front, ref)
            area = _rectangle_area(clipped, ref)
        areas[n] = area
    return areas


def hv_over_time(
    costs,
    config: HvConfig,
    normalize: bool = False,
    band: str = "stderr",
) -> HvTraceSet:
    """Hypervolume of every run's evaluation prefix, with band statistics.

    ``band`` selects the half-width semantics: ``"stderr"`` (sample standard
    deviation over runs divided by sqrt(S), the default) or ``"stddev"``
    (the sample standard deviation itself). Both use divisor S-1 and are
    defined as 0 when S = 1. Points outside the reference box contribute
    zero area; one summary warning covers all of them.
    """
    if band not in BAND_MODES:
        raise ValidationError(f"band must be one of {BAND_MODES}, got {band!r}")
    arr = as_run_tensor(costs)
    if arr.shape[2] != 2:
        raise ValidationError(f"hypervolume traces require 2 objectives, got {arr.shape[2]}")
    if normalize and config.true_pareto_front is None:
        raise ValidationError("normalize=True requires a true Pareto front in the config")
    internal = apply_transform(arr, config.transform)
    ref = _oriented(config.ref_point, config.transform)
    if normalize:
        lower, span = _normalization_bounds(config)
        internal = (internal - lower) / span
        ref = np.ones(2)

    outside = ~(np.all(internal <= ref, axis=2) & np.any(internal < ref, axis=2))
    if outside.any():
        warnings.warn(
            f"{int(outside.sum())} of {outside.size} observations do not strictly "
            f"dominate the reference point and contribute zero hypervolume",
            ClippedPointsWarning,
            stacklevel=2,
        )

    rows = map_ordered(lambda s: _prefix_front_areas(internal[s], ref), range(arr.shape[0]))
    traces = np.vstack(rows)
    center = traces.mean(axis=0)
    if traces.shape[0] > 1:
        spread = traces.std(axis=0, ddof=1)
        if band == "stderr":
            spread = spread / math.sqrt(traces.shape[0])
    else:
        spread = np.zeros(traces.shape[1])
    return HvTraceSet(traces=traces, center=center, band_halfwidth=spread)
