"""Deterministic SVG figures for attainment surfaces and HV traces.

Everything here is a pure function from data plus a :class:`PlotSpec` to
SVG 1.1 bytes; rendering the same inputs twice yields identical files.

Coordinate mapping. Data maps to pixels through an affine transform per
axis (log-flagged axes apply log10 first): with plotted-space bounds
[lo, hi] and pixel box [left, right] x [top, bottom],

    px = left + clamp((x' - lo) / (hi - lo)) * (right - left)
    py = bottom - clamp((y' - lo) / (hi - lo)) * (bottom - top)

where x' = log10(x) on a log axis and clamp caps into [0, 1]. The clamp is
what clips -inf/+inf sentinel rows (and any out-of-bounds value) to the
viewport edges. Unset bounds default to the finite data extent padded by
5% of the span per side, measured in plotted space.

Step polylines are horizontal-then-vertical: a point's second coordinate
extends rightward to the next grid value, so every drawn point is attained
at the surface's level.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Sequence
from xml.sax.saxutils import escape

import numpy as np

from .attainment import SurfaceStack
from .errors import ValidationError
from .hypervolume import HvTraceSet

__all__ = [
    "LINE_STYLES",
    "MARKERS",
    "SeriesStyle",
    "PlotSpec",
    "Frame",
    "series_styles",
    "surface_plot_spec",
    "hv_plot_spec",
    "frame_for_surfaces",
    "frame_for_hv",
    "step_vertices",
    "plot_multiple_surfaces",
    "plot_surface_with_band",
    "plot_hv_with_band",
]

LINE_STYLES = ("solid", "dashed", "dotted")
MARKERS = ("none", "circle", "square")

_DASHES = {"solid": "", "dashed": "6,4", "dotted": "1.5,3.5"}

# margins: left for y tick labels, bottom for x ticks and axis label
_ML, _MR, _MT, _MB = 64.0, 20.0, 40.0, 56.0

_STYLE_BLOCK = (
    "text{font-family:Helvetica,Arial,sans-serif;fill:#222222}"
    ".title{font-size:15px;text-anchor:middle}"
    ".axis-label{font-size:13px;text-anchor:middle}"
    ".tick-label{font-size:11px}"
    ".tick-label.x{text-anchor:middle}"
    ".tick-label.y{text-anchor:end}"
    ".figure-bg{fill:#ffffff}"
    ".plot-border{fill:none;stroke:#444444;stroke-width:1}"
    ".grid{stroke:#dddddd;stroke-width:0.75}"
    ".tick{stroke:#444444;stroke-width:1}"
    ".surface-line,.hv-line,.legend-line{fill:none;stroke-width:1.6}"
    ".band-fill{stroke:none;fill-opacity:0.25}"
    ".legend-swatch{stroke:none;fill-opacity:0.25}"
    ".marker{stroke:none}"
    ".legend-box{fill:#ffffff;fill-opacity:0.85;stroke:#999999;stroke-width:0.8}"
    ".legend-entry text{font-size:12px}"
)


def _fmt(v: float) -> str:
    """Fixed-point pixel value, trailing zeros trimmed. Deterministic."""
    s = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("", "-0") else s


def _esc(s: str) -> str:
    return escape(s, {'"': "&quot;"})


@dataclass(frozen=True)
class SeriesStyle:
    """Color, legend label, and line/marker choice for one plotted series."""

    color: str
    label: str
    line_style: str = "solid"
    marker: str = "none"

    def __post_init__(self) -> None:
        if not isinstance(self.color, str) or not self.color:
            raise ValidationError(f"series color must be a nonempty string, got {self.color!r}")
        if not isinstance(self.label, str) or not self.label:
            raise ValidationError(f"series label must be a nonempty string, got {self.label!r}")
        if self.line_style not in LINE_STYLES:
            raise ValidationError(
                f"line style must be one of {LINE_STYLES}, got {self.line_style!r}"
            )
        if self.marker not in MARKERS:
            raise ValidationError(f"marker must be one of {MARKERS}, got {self.marker!r}")


@dataclass(frozen=True)
class PlotSpec:
    """Figure description: per-series styles, axis setup, labels, size.

    Axis bounds left as None default to the padded data extent. Log flags
    demand strictly positive plotted extents (bounds given here and data
    extents checked at frame construction).
    """

    styles: tuple[SeriesStyle, ...]
    x_label: str = ""
    y_label: str = ""
    title: str = ""
    width: int = 640
    height: int = 480
    x_min: float | None = None
    x_max: float | None = None
    y_min: float | None = None
    y_max: float | None = None
    x_log: bool = False
    y_log: bool = False

    def __post_init__(self) -> None:
        styles = tuple(self.styles)
        if not styles or not all(isinstance(s, SeriesStyle) for s in styles):
            raise ValidationError("styles must be a nonempty sequence of SeriesStyle")
        object.__setattr__(self, "styles", styles)
        for name in ("width", "height"):
            object.__setattr__(self, name, operator.index(getattr(self, name)))
        if self.width < _ML + _MR + 16 or self.height < _MT + _MB + 16:
            raise ValidationError(
                f"figure size {self.width}x{self.height} leaves no room to plot"
            )
        for axis, log, lo, hi in (
            ("x", self.x_log, self.x_min, self.x_max),
            ("y", self.y_log, self.y_min, self.y_max),
        ):
            for bound in (lo, hi):
                if bound is None:
                    continue
                bound = float(bound)
                if not math.isfinite(bound):
                    raise ValidationError(f"{axis} axis bounds must be finite, got {bound!r}")
                if log and bound <= 0:
                    raise ValidationError(
                        f"log-scaled {axis} axis requires strictly positive bounds, got {bound!r}"
                    )
            if lo is not None and hi is not None and not float(lo) < float(hi):
                raise ValidationError(f"{axis} axis bounds must satisfy min < max")


@dataclass(frozen=True)
class Frame:
    """Resolved data-to-pixel mapping for one figure.

    Bounds are stored in plotted space (log10 already applied on log
    axes). The forward maps clamp, so any value, infinities included,
    lands inside the pixel box; the inverse maps exist for tests and do
    not clamp.
    """

    px_left: float
    px_right: float
    px_top: float
    px_bottom: float
    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float
    x_log: bool = False
    y_log: bool = False

    @staticmethod
    def _plotted(v: float, log: bool) -> float:
        if not log:
            return v
        return math.log10(v) if v > 0 else -math.inf

    def _t(self, v: float, lo: float, hi: float, log: bool) -> float:
        t = (self._plotted(float(v), log) - lo) / (hi - lo)
        return min(1.0, max(0.0, t))

    def x_to_px(self, x: float) -> float:
        return self.px_left + self._t(x, self.x_lo, self.x_hi, self.x_log) * (
            self.px_right - self.px_left
        )

    def y_to_px(self, y: float) -> float:
        return self.px_bottom - self._t(y, self.y_lo, self.y_hi, self.y_log) * (
            self.px_bottom - self.px_top
        )

    def px_to_x(self, px: float) -> float:
        v = self.x_lo + (px - self.px_left) / (self.px_right - self.px_left) * (
            self.x_hi - self.x_lo
        )
        return 10.0**v if self.x_log else v

    def px_to_y(self, py: float) -> float:
        v = self.y_lo + (self.px_bottom - py) / (self.px_bottom - self.px_top) * (
            self.y_hi - self.y_lo
        )
        return 10.0**v if self.y_log else v

    def in_bounds(self, x: float, y: float) -> bool:
        """True when (x, y) maps inside the box without needing the clamp."""
        if not (math.isfinite(x) and math.isfinite(y)):
            return False
        tx = (self._plotted(float(x), self.x_log) - self.x_lo) / (self.x_hi - self.x_lo)
        ty = (self._plotted(float(y), self.y_log) - self.y_lo) / (self.y_hi - self.y_lo)
        return 0.0 <= tx <= 1.0 and 0.0 <= ty <= 1.0


def _axis_extent(
    values: np.ndarray, vmin, vmax, log: bool, name: str
) -> tuple[float, float]:
    """Plotted-space [lo, hi] from explicit bounds and finite data."""
    tf = (lambda v: math.log10(v)) if log else (lambda v: float(v))
    if vmin is not None and vmax is not None:
        return tf(float(vmin)), tf(float(vmax))
    if values.size == 0:
        raise ValidationError(
            f"{name} axis has no finite data; set explicit {name} bounds"
        )
    d_lo, d_hi = float(values.min()), float(values.max())
    if log and d_lo <= 0:
        raise ValidationError(
            f"log-scaled {name} axis requires strictly positive data, found {d_lo!r}"
        )
    p_lo, p_hi = tf(d_lo), tf(d_hi)
    span = p_hi - p_lo
    if span == 0:
        pad = 0.5 if (log or p_lo == 0) else abs(p_lo) * 0.05
    else:
        pad = 0.05 * span
    lo = tf(float(vmin)) if vmin is not None else p_lo - pad
    hi = tf(float(vmax)) if vmax is not None else p_hi + pad
    if not (math.isfinite(lo) and math.isfinite(hi) and lo < hi):
        raise ValidationError(f"{name} axis bounds collapsed to [{lo!r}, {hi!r}]")
    return lo, hi


def _build_frame(spec: PlotSpec, xs: np.ndarray, ys: np.ndarray) -> Frame:
    x_lo, x_hi = _axis_extent(xs, spec.x_min, spec.x_max, spec.x_log, "x")
    y_lo, y_hi = _axis_extent(ys, spec.y_min, spec.y_max, spec.y_log, "y")
    return Frame(
        px_left=_ML,
        px_right=spec.width - _MR,
        px_top=_MT,
        px_bottom=spec.height - _MB,
        x_lo=x_lo,
        x_hi=x_hi,
        y_lo=y_lo,
        y_hi=y_hi,
        x_log=spec.x_log,
        y_log=spec.y_log,
    )


def _finite(values) -> np.ndarray:
    arr = np.asarray(values, dtype=float).ravel()
    return arr[np.isfinite(arr)]


def frame_for_surfaces(stack: SurfaceStack, spec: PlotSpec) -> Frame:
    """The exact mapping :func:`plot_multiple_surfaces` will use."""
    return _build_frame(spec, _finite(stack.grid), _finite(stack.surfaces[:, :, 1]))


def frame_for_hv(trace_sets: Sequence[HvTraceSet], spec: PlotSpec) -> Frame:
    """The exact mapping :func:`plot_hv_with_band` will use."""
    if not trace_sets:
        raise ValidationError("at least one trace set is required")
    n = trace_sets[0].n_steps
    ys = np.concatenate(
        [t.center - t.band_halfwidth for t in trace_sets]
        + [t.center + t.band_halfwidth for t in trace_sets]
    )
    return _build_frame(spec, np.array([1.0, float(n)]), _finite(ys))


def step_vertices(points) -> np.ndarray:
    """Staircase vertices for a surface row: corners inserted between nodes.

    Between consecutive points the path moves horizontally first, then
    vertically, e.g. (1,3),(2,2) walks (1,3) -> (2,3) -> (2,2).
    """
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 1:
        raise ValidationError(f"step vertices need an (n, 2) array, got {pts.shape}")
    verts = [pts[0]]
    for i in range(1, pts.shape[0]):
        verts.append((pts[i, 0], pts[i - 1, 1]))
        verts.append(pts[i])
    return np.array(verts)


# -- tick placement ------------------------------------------------------------

def _linear_ticks(lo: float, hi: float, target: int = 5) -> list[float]:
    """Round tick values from the 1-2-5 ladder covering [lo, hi]."""
    span = hi - lo
    raw = span / target
    mag = 10.0 ** math.floor(math.log10(raw))
    step = 10.0 * mag
    for m in (1.0, 2.0, 5.0):
        if m * mag >= raw:
            step = m * mag
            break
    i0 = math.ceil(lo / step - 1e-9)
    i1 = math.floor(hi / step + 1e-9)
    return [i * step for i in range(i0, i1 + 1)]


def _log_ticks(lo_log: float, hi_log: float) -> list[float]:
    """Data-space ticks for a log axis: decades, else a 1-2-5 fill-in."""
    k0 = math.ceil(lo_log - 1e-9)
    k1 = math.floor(hi_log + 1e-9)
    decades = [10.0**k for k in range(k0, k1 + 1)]
    if len(decades) >= 2:
        return decades
    ticks = [
        m * 10.0**k
        for k in range(math.floor(lo_log) - 1, math.floor(hi_log) + 2)
        for m in (1.0, 2.0, 5.0)
    ]
    kept = [t for t in ticks if lo_log - 1e-9 <= math.log10(t) <= hi_log + 1e-9]
    return kept or [10.0**lo_log, 10.0**hi_log]


def _tick_label(v: float) -> str:
    return "%g" % v


# -- SVG assembly ---------------------------------------------------------------

def _mapped_points(frame: Frame, verts: np.ndarray) -> str:
    pairs: list[str] = []
    for x, y in verts:
        pair = f"{_fmt(frame.x_to_px(x))},{_fmt(frame.y_to_px(y))}"
        if not pairs or pairs[-1] != pair:
            pairs.append(pair)
    return " ".join(pairs)


def _polyline(frame: Frame, verts: np.ndarray, style: SeriesStyle, css: str) -> str:
    dash = _DASHES[style.line_style]
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<polyline class="{css}" points="{_mapped_points(frame, verts)}" '
        f'stroke="{_esc(style.color)}"{dash_attr}/>'
    )


def _band_polygon(frame: Frame, lower: np.ndarray, upper: np.ndarray, color: str) -> str:
    verts = np.vstack([lower, upper[::-1]])
    return (
        f'<polygon class="band-fill" points="{_mapped_points(frame, verts)}" '
        f'fill="{_esc(color)}"/>'
    )


def _markers(frame: Frame, points: np.ndarray, style: SeriesStyle) -> list[str]:
    if style.marker == "none":
        return []
    out = []
    color = _esc(style.color)
    for x, y in points:
        if not frame.in_bounds(x, y):
            continue
        px, py = _fmt(frame.x_to_px(x)), _fmt(frame.y_to_px(y))
        if style.marker == "circle":
            out.append(f'<circle class="marker" cx="{px}" cy="{py}" r="3" fill="{color}"/>')
        else:
            out.append(
                f'<rect class="marker" x="{_fmt(frame.x_to_px(x) - 2.7)}" '
                f'y="{_fmt(frame.y_to_px(y) - 2.7)}" width="5.4" height="5.4" fill="{color}"/>'
            )
    return out


def _axes_fragments(frame: Frame) -> tuple[list[str], list[str]]:
    """(gridlines under the data, ticks and labels over the data)."""
    grid: list[str] = []
    over: list[str] = []
    if frame.x_log:
        x_ticks = _log_ticks(frame.x_lo, frame.x_hi)
    else:
        x_ticks = _linear_ticks(frame.x_lo, frame.x_hi)
    if frame.y_log:
        y_ticks = _log_ticks(frame.y_lo, frame.y_hi)
    else:
        y_ticks = _linear_ticks(frame.y_lo, frame.y_hi)
    bottom, top, left, right = frame.px_bottom, frame.px_top, frame.px_left, frame.px_right
    for v in x_ticks:
        px = _fmt(frame.x_to_px(v))
        grid.append(f'<line class="grid" x1="{px}" y1="{_fmt(top)}" x2="{px}" y2="{_fmt(bottom)}"/>')
        over.append(
            f'<line class="tick" x1="{px}" y1="{_fmt(bottom)}" x2="{px}" y2="{_fmt(bottom + 5)}"/>'
        )
        over.append(
            f'<text class="tick-label x" x="{px}" y="{_fmt(bottom + 18)}">{_tick_label(v)}</text>'
        )
    for v in y_ticks:
        py = _fmt(frame.y_to_px(v))
        grid.append(f'<line class="grid" x1="{_fmt(left)}" y1="{py}" x2="{_fmt(right)}" y2="{py}"/>')
        over.append(
            f'<line class="tick" x1="{_fmt(left - 5)}" y1="{py}" x2="{_fmt(left)}" y2="{py}"/>'
        )
        over.append(
            f'<text class="tick-label y" x="{_fmt(left - 8)}" y="{_fmt(frame.y_to_px(v) + 3.5)}">'
            f"{_tick_label(v)}</text>"
        )
    return grid, over


def _legend_fragment(frame: Frame, styles: Sequence[SeriesStyle]) -> list[str]:
    pad, entry_h, swatch, gap = 6.0, 17.0, 20.0, 6.0
    text_w = max(len(s.label) for s in styles) * 6.8
    box_w = pad + swatch + gap + text_w + pad
    box_h = 2 * pad + entry_h * len(styles) - 5.0
    x0 = frame.px_right - box_w - 8.0
    y0 = frame.px_top + 8.0
    out = [
        f'<g class="legend"><rect class="legend-box" x="{_fmt(x0)}" y="{_fmt(y0)}" '
        f'width="{_fmt(box_w)}" height="{_fmt(box_h)}"/>'
    ]
    for i, style in enumerate(styles):
        y = y0 + pad + i * entry_h + 6.0
        color = _esc(style.color)
        dash = _DASHES[style.line_style]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        parts = [
            f'<g class="legend-entry">'
            f'<line class="legend-line" x1="{_fmt(x0 + pad)}" y1="{_fmt(y)}" '
            f'x2="{_fmt(x0 + pad + swatch)}" y2="{_fmt(y)}" stroke="{color}"{dash_attr}/>'
        ]
        parts.append(
            f'<text x="{_fmt(x0 + pad + swatch + gap)}" y="{_fmt(y + 4.0)}">'
            f"{_esc(style.label)}</text></g>"
        )
        out.append("".join(parts))
    out.append("</g>")
    return out


def _write_svg(path, spec: PlotSpec, frame: Frame, body: list[str]) -> None:
    grid, ticks = _axes_fragments(frame)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        f"<style>{_STYLE_BLOCK}</style>",
        f'<rect class="figure-bg" x="0" y="0" width="{spec.width}" height="{spec.height}"/>',
    ]
    if spec.title:
        parts.append(
            f'<text class="title" x="{_fmt(spec.width / 2)}" y="24">{_esc(spec.title)}</text>'
        )
    if spec.x_label:
        parts.append(
            f'<text class="axis-label" x="{_fmt((frame.px_left + frame.px_right) / 2)}" '
            f'y="{_fmt(frame.px_bottom + 40)}">{_esc(spec.x_label)}</text>'
        )
    if spec.y_label:
        mid = _fmt((frame.px_top + frame.px_bottom) / 2)
        parts.append(
            f'<text class="axis-label" transform="rotate(-90 16 {mid})" x="16" y="{mid}">'
            f"{_esc(spec.y_label)}</text>"
        )
    parts.extend(grid)
    parts.extend(body)
    parts.append(
        f'<rect class="plot-border" x="{_fmt(frame.px_left)}" y="{_fmt(frame.px_top)}" '
        f'width="{_fmt(frame.px_right - frame.px_left)}" '
        f'height="{_fmt(frame.px_bottom - frame.px_top)}"/>'
    )
    parts.extend(ticks)
    parts.extend(_legend_fragment(frame, spec.styles))
    parts.append("</svg>")
    with open(path, "wb") as fh:
        fh.write("\n".join(parts).encode("utf-8"))
        fh.write(b"\n")


# -- public plotting entry points -----------------------------------------------

def plot_multiple_surfaces(stack: SurfaceStack, spec: PlotSpec, path) -> None:
    """One step polyline and one legend entry per attainment surface."""
    if len(spec.styles) != stack.n_levels:
        raise ValidationError(
            f"{stack.n_levels} surfaces need {stack.n_levels} colors/labels, "
            f"got {len(spec.styles)}"
        )
    frame = frame_for_surfaces(stack, spec)
    body: list[str] = []
    for k, style in enumerate(spec.styles):
        body.append(_polyline(frame, step_vertices(stack.surfaces[k]), style, "surface-line"))
        body.extend(_markers(frame, stack.surfaces[k], style))
    _write_svg(path, spec, frame, body)


def plot_surface_with_band(stack: SurfaceStack, spec: PlotSpec, path) -> None:
    """Center surface as a line inside a translucent band surface1..surface3.

    The stack must hold exactly 3 surfaces ordered by level; the first and
    last bound the band, the middle one is drawn solid. One style only,
    hence a single legend entry.
    """
    if stack.n_levels != 3:
        raise ValidationError(
            f"band plots take a 3-level stack (lower, center, upper), got K={stack.n_levels}"
        )
    if len(spec.styles) != 1:
        raise ValidationError(f"band plots take exactly 1 style, got {len(spec.styles)}")
    frame = frame_for_surfaces(stack, spec)
    style = spec.styles[0]
    body = [
        _band_polygon(
            frame,
            step_vertices(stack.surfaces[0]),
            step_vertices(stack.surfaces[2]),
            style.color,
        ),
        _polyline(frame, step_vertices(stack.surfaces[1]), style, "surface-line"),
    ]
    body.extend(_markers(frame, stack.surfaces[1], style))
    _write_svg(path, spec, frame, body)


def plot_hv_with_band(trace_sets: Sequence[HvTraceSet], spec: PlotSpec, path) -> None:
    """Center line plus center +/- halfwidth band per trace set.

    The x axis is the evaluation index 1..N; all trace sets must share N.
    """
    trace_sets = list(trace_sets)
    if not trace_sets:
        raise ValidationError("at least one trace set is required")
    if len(spec.styles) != len(trace_sets):
        raise ValidationError(
            f"{len(trace_sets)} trace sets need as many colors/labels, got {len(spec.styles)}"
        )
    n = trace_sets[0].n_steps
    for i, t in enumerate(trace_sets):
        if t.n_steps != n:
            raise ValidationError(
                f"trace sets disagree on length: set 0 has {n} steps, set {i} has {t.n_steps}"
            )
    frame = frame_for_hv(trace_sets, spec)
    steps = np.arange(1, n + 1, dtype=float)
    body: list[str] = []
    for t, style in zip(trace_sets, spec.styles):
        upper = np.column_stack([steps, t.center + t.band_halfwidth])
        lower = np.column_stack([steps, t.center - t.band_halfwidth])
        body.append(_band_polygon(frame, lower, upper, style.color))
    for t, style in zip(trace_sets, spec.styles):
        center = np.column_stack([steps, t.center])
        body.append(_polyline(frame, center, style, "hv-line"))
        body.extend(_markers(frame, center, style))
    _write_svg(path, spec, frame, body)


# -- spec constructors ------------------------------------------------------------

def series_styles(colors, labels, line_styles=None, markers=None) -> tuple[SeriesStyle, ...]:
    """Zip parallel per-series option lists into SeriesStyle tuples."""
    colors = list(colors)
    labels = list(labels)
    if len(colors) != len(labels):
        raise ValidationError(f"{len(colors)} colors for {len(labels)} labels")
    line_styles = list(line_styles) if line_styles is not None else ["solid"] * len(colors)
    markers = list(markers) if markers is not None else ["none"] * len(colors)
    if len(line_styles) != len(colors) or len(markers) != len(colors):
        raise ValidationError("line_styles and markers must match the number of colors")
    return tuple(
        SeriesStyle(color=c, label=l, line_style=ls, marker=mk)
        for c, l, ls, mk in zip(colors, labels, line_styles, markers)
    )


def surface_plot_spec(
    stack: SurfaceStack,
    colors: Sequence[str],
    labels: Sequence[str],
    *,
    line_styles: Sequence[str] | None = None,
    markers: Sequence[str] | None = None,
    title: str = "",
    x_label: str = "f1",
    y_label: str = "f2",
    size: tuple[int, int] = (640, 480),
    x_min: float | None = None,
    x_max: float | None = None,
    y_min: float | None = None,
    y_max: float | None = None,
    x_log: bool | None = None,
    y_log: bool | None = None,
) -> PlotSpec:
    """PlotSpec for surface figures; log flags default to the stack's own."""
    return PlotSpec(
        styles=series_styles(colors, labels, line_styles, markers),
        x_label=x_label,
        y_label=y_label,
        title=title,
        width=size[0],
        height=size[1],
        x_min=x_min,
        x_max=x_max,
        y_min=y_min,
        y_max=y_max,
        x_log=(0 in stack.transform.log_indices) if x_log is None else bool(x_log),
        y_log=(1 in stack.transform.log_indices) if y_log is None else bool(y_log),
    )


def hv_plot_spec(
    colors: Sequence[str],
    labels: Sequence[str],
    *,
    line_styles: Sequence[str] | None = None,
    markers: Sequence[str] | None = None,
    title: str = "",
    x_label: str = "evaluations",
    y_label: str = "dominated hypervolume",
    size: tuple[int, int] = (640, 480),
    x_min: float | None = None,
    x_max: float | None = None,
    y_min: float | None = None,
    y_max: float | None = None,
    x_log: bool = False,
    y_log: bool = False,
) -> PlotSpec:
    """PlotSpec for HV-over-evaluations figures."""
    return PlotSpec(
        styles=series_styles(colors, labels, line_styles, markers),
        x_label=x_label,
        y_label=y_label,
        title=title,
        width=size[0],
        height=size[1],
        x_min=x_min,
        x_max=x_max,
        y_min=y_min,
        y_max=y_max,
        x_log=x_log,
        y_log=y_log,
    )
