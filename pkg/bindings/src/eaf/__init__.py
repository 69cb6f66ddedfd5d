"""Array-first companion API over ``eafkit``.

``eafkit`` itself is organized around interchange files and a CLI. This
package exposes the same functionality to callers who already hold their
run data as in-memory arrays: surfaces come back as one numeric array,
and every plot call writes a standalone SVG file and returns its path.
There is no figure-object integration; plots are files, nothing else.

No numerics live here. Every computation, validation, and byte of SVG
output is produced by ``eafkit``, so results and error messages are
identical to the core's, and plot files are byte-identical to what the
``eafkit`` CLI writes for the same inputs and defaults.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

import eafkit
from eafkit import (
    HvConfig,
    SurfaceStack,
    TransformSpec,
    ValidationError,
)

__version__ = eafkit.__version__

__all__ = [
    "BoundSurfaceResult",
    "EmpiricalAttainmentFuncPlot",
    "get_empirical_attainment_surface",
]


def _transform(larger_is_better_objectives, log_scale) -> TransformSpec:
    return TransformSpec.of(
        larger_is_better_objectives if larger_is_better_objectives is not None else (),
        log_scale if log_scale is not None else (),
    )


@dataclass(frozen=True)
class BoundSurfaceResult:
    """Attainment surfaces as a (K, |grid|, 2) float array plus their levels.

    Unattained positions carry native floating-point infinities. The object
    converts with ``np.asarray`` and indexes/iterates per level, so code
    expecting a bare array can use it directly.
    """

    surfaces: np.ndarray
    levels: tuple[int, ...]

    def __array__(self, dtype=None, copy=None):
        arr = self.surfaces
        return arr.astype(dtype) if dtype is not None else arr

    def __len__(self) -> int:
        return self.surfaces.shape[0]

    def __getitem__(self, k):
        return self.surfaces[k]


def get_empirical_attainment_surface(
    costs,
    levels: Sequence[int],
    larger_is_better_objectives: Sequence[int] | None = None,
    log_scale: Sequence[int] | None = None,
) -> BoundSurfaceResult:
    """Attainment surfaces of ``costs`` at the given levels, as one array.

    ``costs`` is an (S, N, 2) array of per-run objective vectors; ``levels``
    lists the number-of-runs thresholds, each in [1, S], strictly
    increasing. ``larger_is_better_objectives`` flips the named objectives
    to maximization and ``log_scale`` marks objectives whose axis should
    default to log scale when the result is plotted.
    """
    stack = eafkit.empirical_attainment_surfaces(
        costs, levels, _transform(larger_is_better_objectives, log_scale)
    )
    return BoundSurfaceResult(surfaces=stack.surfaces, levels=stack.levels)


class EmpiricalAttainmentFuncPlot:
    """SVG plot writer bound to one problem's framing.

    The constructor records everything that belongs to the problem rather
    than to an individual figure: the reference point for hypervolume, the
    true Pareto front for normalization, objective orientation, and fixed
    axis bounds. Bounds apply to surface plots, whose axes are the two
    objectives. Each ``plot_*`` method writes one SVG file and returns the
    path it wrote.
    """

    def __init__(
        self,
        ref_point=None,
        true_pareto_sols=None,
        larger_is_better_objectives: Sequence[int] | None = None,
        log_scale: Sequence[int] | None = None,
        x_min: float | None = None,
        x_max: float | None = None,
        y_min: float | None = None,
        y_max: float | None = None,
    ) -> None:
        self.ref_point = ref_point
        self.true_pareto_sols = true_pareto_sols
        self.transform = _transform(larger_is_better_objectives, log_scale)
        self.x_min = x_min
        self.x_max = x_max
        self.y_min = y_min
        self.y_max = y_max

    def _stack(self, surfs) -> SurfaceStack:
        if isinstance(surfs, BoundSurfaceResult):
            surfaces = surfs.surfaces
            levels = surfs.levels
        else:
            surfaces = np.asarray(surfs, dtype=float)
            if surfaces.ndim != 3 or surfaces.shape[-1] != 2:
                raise ValidationError(
                    f"surfs must have shape (K, grid, 2), got {surfaces.shape}"
                )
            # a bare array carries no level numbers; count the layers
            levels = tuple(range(1, surfaces.shape[0] + 1))
        return SurfaceStack(
            grid=surfaces[0, :, 0],
            surfaces=surfaces,
            levels=levels,
            transform=self.transform,
        )

    def _surface_spec(self, stack, colors, labels, linestyles, markers, title, size):
        return eafkit.surface_plot_spec(
            stack,
            colors,
            labels,
            line_styles=linestyles,
            markers=markers,
            title=title,
            size=size,
            x_min=self.x_min,
            x_max=self.x_max,
            y_min=self.y_min,
            y_max=self.y_max,
        )

    def plot_multiple_surface(
        self,
        path,
        colors: Sequence[str],
        labels: Sequence[str],
        surfs,
        linestyles: Sequence[str] | None = None,
        markers: Sequence[str] | None = None,
        title: str = "",
        size: tuple[int, int] = (640, 480),
    ):
        """One step line per surface; returns the written SVG path."""
        stack = self._stack(surfs)
        spec = self._surface_spec(stack, colors, labels, linestyles, markers, title, size)
        eafkit.plot_multiple_surfaces(stack, spec, path)
        return path

    def plot_surface_with_band(
        self,
        path,
        color: str,
        label: str,
        surfs,
        title: str = "",
        size: tuple[int, int] = (640, 480),
    ):
        """Band between the outer surfaces of a 3-level stack, middle as line.

        ``surfs`` must hold exactly three surfaces ordered by level; the
        first and last bound the filled band. Returns the written SVG path.
        """
        stack = self._stack(surfs)
        spec = self._surface_spec(stack, [color], [label], None, None, title, size)
        eafkit.plot_surface_with_band(stack, spec, path)
        return path

    def plot_multiple_hypervolume2d_with_band(
        self,
        path,
        costs_array,
        colors: Sequence[str],
        labels: Sequence[str],
        normalize: bool = False,
        band: str = "stderr",
        title: str = "",
        size: tuple[int, int] = (640, 480),
    ):
        """Mean hypervolume over evaluations with an uncertainty band per group.

        ``costs_array`` stacks one (S, N, 2) run tensor per compared method;
        a plain list of tensors with differing S also works. Requires a
        reference point; ``normalize=True`` additionally requires the true
        Pareto front. Returns the written SVG path.
        """
        if self.ref_point is None:
            raise ValidationError("a reference point is required for hypervolume plots")
        config = HvConfig(
            ref_point=self.ref_point,
            true_pareto_front=self.true_pareto_sols,
            transform=self.transform,
        )
        trace_sets = [
            eafkit.hv_over_time(costs, config, normalize=normalize, band=band)
            for costs in costs_array
        ]
        spec = eafkit.hv_plot_spec(colors, labels, title=title, size=size)
        eafkit.plot_hv_with_band(trace_sets, spec, path)
        return path
