"""Empirical attainment surfaces, 2D hypervolume, and deterministic plots.

The pipeline: a run tensor of shape (runs, evaluations, objectives) goes
through :func:`empirical_attainment_surfaces` or :func:`hv_over_time`,
results travel as JSON/CSV via :mod:`eafkit.dataio`, and figures come out
of :mod:`eafkit.render` as reproducible SVG. The ``eafkit`` command wires
the same pieces together from the shell.
"""

from .attainment import (
    SurfaceStack,
    TransformSpec,
    apply_transform,
    as_run_tensor,
    attainment_fraction,
    check_levels,
    empirical_attainment_surfaces,
    per_run_attainment_value,
    restore_orientation,
)
from .dataio import (
    SCHEMA_VERSION,
    RunArchive,
    read_hv_traces,
    read_runs,
    read_surfaces,
    write_hv_traces,
    write_runs,
    write_surfaces,
)
from .errors import (
    DataError,
    EafkitError,
    FormatError,
    ValidationError,
    VersionError,
)
from .hypervolume import (
    ClippedPointsWarning,
    HvConfig,
    HvTraceSet,
    hv_over_time,
    hypervolume_2d,
    normalized_hypervolume_2d,
)
from .pareto import (
    as_point,
    as_point_set,
    dominates,
    nondominated_filter,
    set_attains,
    weakly_dominates,
)
from .render import (
    LINE_STYLES,
    MARKERS,
    Frame,
    PlotSpec,
    SeriesStyle,
    frame_for_hv,
    frame_for_surfaces,
    hv_plot_spec,
    plot_hv_with_band,
    plot_multiple_surfaces,
    plot_surface_with_band,
    series_styles,
    step_vertices,
    surface_plot_spec,
)
from .synth import synthetic_runs

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "SCHEMA_VERSION",
    "LINE_STYLES",
    "MARKERS",
    "EafkitError",
    "ValidationError",
    "DataError",
    "FormatError",
    "VersionError",
    "ClippedPointsWarning",
    "TransformSpec",
    "SurfaceStack",
    "RunArchive",
    "HvConfig",
    "HvTraceSet",
    "PlotSpec",
    "SeriesStyle",
    "Frame",
    "as_point",
    "as_point_set",
    "weakly_dominates",
    "dominates",
    "set_attains",
    "nondominated_filter",
    "as_run_tensor",
    "check_levels",
    "apply_transform",
    "restore_orientation",
    "attainment_fraction",
    "per_run_attainment_value",
    "empirical_attainment_surfaces",
    "hypervolume_2d",
    "normalized_hypervolume_2d",
    "hv_over_time",
    "read_runs",
    "write_runs",
    "read_surfaces",
    "write_surfaces",
    "read_hv_traces",
    "write_hv_traces",
    "series_styles",
    "surface_plot_spec",
    "hv_plot_spec",
    "frame_for_surfaces",
    "frame_for_hv",
    "step_vertices",
    "plot_multiple_surfaces",
    "plot_surface_with_band",
    "plot_hv_with_band",
    "synthetic_runs",
]
