"""Empirical attainment fractions and level-L attainment surfaces.

The universal input is a run tensor: an (S, N, 2) array holding the
objective vectors of S independent runs with N evaluations each. For a
query point y, the attainment fraction is the share of runs whose front
weakly dominates y. The level-L surface is the boundary of the region
attained by at least L of the S runs; it is realized as the L-th smallest
of the per-run attainment step functions, evaluated on the shared grid of
first-objective values.

All geometry is computed in a canonical minimize-all orientation.
Maximized objectives are negated on the way in and restored on the way
out, so emitted surfaces are in the caller's original sign convention.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ._threads import map_ordered
from .errors import DataError, ValidationError
from .pareto import as_point, as_point_set, nondominated_filter

__all__ = [
    "TransformSpec",
    "SurfaceStack",
    "as_run_tensor",
    "check_levels",
    "apply_transform",
    "restore_orientation",
    "attainment_fraction",
    "per_run_attainment_value",
    "empirical_attainment_surfaces",
]


@dataclass(frozen=True)
class TransformSpec:
    """Orientation and scale hints for raw objective values.

    ``maximize_indices`` lists objectives recorded as larger-is-better;
    they are negated into the canonical minimize-all form. ``log_indices``
    lists objectives meant for log-scale axes; they only affect validation
    (values must be strictly positive) and rendering, never the surface
    geometry, because order statistics and dominance are invariant under
    strictly monotone per-axis maps.
    """

    maximize_indices: frozenset[int] = frozenset()
    log_indices: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        for name in ("maximize_indices", "log_indices"):
            raw = getattr(self, name)
            try:
                coerced = frozenset(operator.index(i) for i in raw)
            except TypeError:
                raise ValidationError(f"{name} must be a collection of integers") from None
            object.__setattr__(self, name, coerced)
            if any(i < 0 for i in coerced):
                raise ValidationError(f"{name} must be nonnegative, got {sorted(coerced)}")

    @classmethod
    def of(cls, maximize: Iterable[int] | None = None, log: Iterable[int] | None = None) -> "TransformSpec":
        return cls(frozenset(maximize or ()), frozenset(log or ()))

    def check_dimension(self, m: int) -> None:
        out_of_range = sorted(i for i in self.maximize_indices | self.log_indices if i >= m)
        if out_of_range:
            raise ValidationError(
                f"transform indices {out_of_range} out of range for {m} objectives"
            )

    @property
    def is_identity(self) -> bool:
        return not self.maximize_indices and not self.log_indices


def as_run_tensor(costs) -> np.ndarray:
    """Coerce to an (S, N, M) float array of per-run objective vectors.

    Every value must be finite: NaN breaks dominance and +/-inf sentinels
    belong only in derived surfaces, never in input data.
    """
    try:
        arr = np.asarray(costs, dtype=float)
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"run tensor is ragged or non-numeric: {exc}") from None
    if arr.ndim != 3:
        raise ValidationError(
            f"run tensor must have shape (runs, evaluations, objectives), got {arr.shape}"
        )
    if min(arr.shape) < 1:
        raise ValidationError(f"run tensor must be nonempty in every axis, got {arr.shape}")
    bad = ~np.isfinite(arr)
    if bad.any():
        s, n, m = (int(i) for i in np.argwhere(bad)[0])
        raise DataError(
            f"run tensor contains non-finite value {arr[s, n, m]!r} "
            f"at run {s}, row {n}, objective {m}"
        )
    return arr


def check_levels(levels: Sequence[int], n_runs: int | None = None) -> tuple[int, ...]:
    """Validate a strictly increasing list of attainment levels.

    Levels count runs, so each must lie in [1, S]; pass ``n_runs=None`` to
    defer the upper bound (used by the CLI before the data file is read).
    """
    try:
        values = tuple(operator.index(level) for level in levels)
    except TypeError:
        raise ValidationError("levels must be integers") from None
    if not values:
        raise ValidationError("at least one level is required")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise ValidationError(f"levels must be strictly increasing, got {list(values)}")
    if values[0] < 1:
        raise ValidationError(f"levels must be >= 1, got {values[0]}")
    if n_runs is not None and values[-1] > n_runs:
        raise ValidationError(
            f"level {values[-1]} exceeds the number of runs ({n_runs})"
        )
    return values


def apply_transform(costs, transform: TransformSpec) -> np.ndarray:
    """Bring a run tensor into the canonical minimize-all orientation.

    Maximized objectives are negated. Log-scaled objectives are validated
    (strictly positive in the caller's orientation) but left numerically
    unchanged; the flag is carried along for axis mapping at render time.
    """
    arr = as_run_tensor(costs)
    transform.check_dimension(arr.shape[2])
    for m in sorted(transform.log_indices):
        bad = arr[:, :, m] <= 0
        if bad.any():
            s, n = (int(i) for i in np.argwhere(bad)[0])
            raise DataError(
                f"log-scaled objective {m} must be strictly positive; "
                f"found {arr[s, n, m]!r} at run {s}, row {n}"
            )
    out = arr.copy()
    idx = sorted(transform.maximize_indices)
    if idx:
        out[:, :, idx] = -out[:, :, idx]
    return out


def restore_orientation(points: np.ndarray, transform: TransformSpec) -> np.ndarray:
    """Map points from the canonical orientation back to the caller's.

    Works on any array whose last axis indexes objectives. Infinite
    sentinels flip sign along with everything else, so an unattained head
    reads -inf for a maximized objective.
    """
    out = np.array(points, dtype=float, copy=True)
    idx = sorted(i for i in transform.maximize_indices if i < out.shape[-1])
    if idx:
        out[..., idx] = -out[..., idx]
    return out


def attainment_fraction(fronts: Sequence, y) -> float:
    """Fraction of fronts that weakly dominate ``y`` (a multiple of 1/S)."""
    if len(fronts) == 0:
        raise ValidationError("attainment fraction requires at least one front")
    point = as_point(y)
    hits = 0
    for front in fronts:
        pts = as_point_set(front, m=point.shape[0])
        if pts.shape[0] and bool(np.all(pts <= point, axis=1).any()):
            hits += 1
    return hits / len(fronts)


def per_run_attainment_value(front, x: float) -> float:
    """Best second objective a single front attains at first objective <= x.

    ``front`` must be a nondominated 2D set sorted ascending by the first
    coordinate (as produced by :func:`nondominated_filter`). Returns +inf
    when the front has no point at or left of ``x``; the result is
    nonincreasing in ``x``.
    """
    pts = as_point_set(front, m=2)
    i = int(np.searchsorted(pts[:, 0], x, side="right")) - 1
    if i < 0:
        return math.inf
    return float(pts[i, 1])


def _step_value_matrix(fronts: Sequence[np.ndarray], grid: np.ndarray) -> np.ndarray:
    """Per-run attainment step values on the shared grid, shape (S, |grid|)."""
    values = np.full((len(fronts), grid.shape[0]), np.inf)
    for s, front in enumerate(fronts):
        idx = np.searchsorted(front[:, 0], grid, side="right") - 1
        covered = idx >= 0
        values[s, covered] = front[idx[covered], 1]
    return values


@dataclass(frozen=True)
class SurfaceStack:
    """K aligned attainment surfaces over a shared first-objective grid.

    ``surfaces`` has shape (K, |grid|, 2); row k belongs to ``levels[k]``
    and its first coordinates equal ``grid`` entry for entry. Points are
    stored in the caller's sign convention; rows are ordered ascending in
    the canonical (minimize-all) first coordinate, with -inf/+inf sentinel
    entries at the ends of the grid. Unattained positions carry an
    infinite second coordinate.
    """

    grid: np.ndarray
    surfaces: np.ndarray
    levels: tuple[int, ...]
    transform: TransformSpec = field(default_factory=TransformSpec)

    def __post_init__(self) -> None:
        grid = np.array(self.grid, dtype=float, copy=True)
        surfaces = np.array(self.surfaces, dtype=float, copy=True)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "surfaces", surfaces)
        object.__setattr__(self, "levels", check_levels(self.levels))
        if np.isnan(grid).any() or np.isnan(surfaces).any():
            raise DataError("surface stack contains NaN")
        if surfaces.ndim != 3 or surfaces.shape[2] != 2:
            raise ValidationError(
                f"surfaces must have shape (K, |grid|, 2), got {surfaces.shape}"
            )
        k, g = surfaces.shape[:2]
        if k != len(self.levels):
            raise ValidationError(
                f"{k} surfaces for {len(self.levels)} levels"
            )
        if grid.ndim != 1 or grid.shape[0] != g:
            raise ValidationError(
                f"grid of length {grid.shape} does not match surfaces of width {g}"
            )
        if g < 3:
            raise ValidationError("grid needs two sentinels plus at least one finite value")
        if not np.array_equal(surfaces[:, :, 0], np.broadcast_to(grid, (k, g))):
            raise ValidationError("surface first coordinates must equal the grid")
        internal = self.internal_surfaces()
        xs = internal[0, :, 0]
        if not (xs[0] == -math.inf and xs[-1] == math.inf):
            raise ValidationError("grid must start at -inf and end at +inf")
        if not np.isfinite(xs[1:-1]).all() or np.any(np.diff(xs[1:-1]) <= 0):
            raise ValidationError("interior grid values must be finite and strictly increasing")
        ys = internal[:, :, 1]
        with np.errstate(invalid="ignore"):  # inf - inf between equal sentinels is fine
            if np.any(np.diff(ys, axis=1) > 0):
                raise ValidationError(
                    "staircase violation: second coordinates must be nonincreasing"
                )
            if np.any(np.diff(ys, axis=0) < 0):
                raise ValidationError("level nesting violation across surfaces")
        grid.setflags(write=False)
        surfaces.setflags(write=False)

    def internal_surfaces(self) -> np.ndarray:
        """Surfaces mapped to the canonical minimize-all orientation."""
        return restore_orientation(self.surfaces, self.transform)

    @property
    def n_levels(self) -> int:
        return self.surfaces.shape[0]

    def surface(self, k: int) -> np.ndarray:
        """Points of the k-th surface, shape (|grid|, 2)."""
        return self.surfaces[k]


def empirical_attainment_surfaces(
    costs,
    levels: Sequence[int],
    transform: TransformSpec | None = None,
) -> SurfaceStack:
    """Compute the level-L attainment surfaces of a bi-objective run tensor.

    Each run contributes its nondominated front; the shared grid is the
    union of the fronts' first coordinates plus -inf/+inf sentinels. At
    every grid value the level-L surface takes the L-th smallest of the
    per-run attainment step values, so a point is on the level-L surface
    exactly when at least L of the S runs attain it and none attains any
    strictly better second objective there.
    """
    transform = transform or TransformSpec()
    arr = as_run_tensor(costs)
    n_runs, _, n_obj = arr.shape
    if n_obj != 2:
        raise ValidationError(
            f"attainment surfaces require exactly 2 objectives, got {n_obj}"
        )
    level_values = check_levels(levels, n_runs)
    internal = apply_transform(arr, transform)
    fronts = map_ordered(nondominated_filter, [internal[s] for s in range(n_runs)])
    finite_x = np.unique(np.concatenate([front[:, 0] for front in fronts]))
    grid = np.concatenate(([-np.inf], finite_x, [np.inf]))
    step_values = _step_value_matrix(fronts, grid)
    step_values.sort(axis=0)
    picked = step_values[[level - 1 for level in level_values], :]
    internal_stack = np.stack(
        [np.column_stack([grid, picked[k]]) for k in range(len(level_values))]
    )
    surfaces = restore_orientation(internal_stack, transform)
    return SurfaceStack(
        grid=surfaces[0, :, 0].copy(),
        surfaces=surfaces,
        levels=level_values,
        transform=transform,
    )
