"""Command-line frontend: runs files in, surfaces/traces/figures out.

Grammar:

    eafkit eaf compute --runs RUNS --levels L1,L2,... --out PATH
    eafkit eaf plot --surfs PATH --colors ... --labels ... --out FIG.svg
    eafkit hv --runs RUNS --ref Y1,Y2 [--out PATH] [--plot FIG.svg ...]
    eafkit synth [--seed S ...] --out PATH

Exit codes: 0 success, 1 bad arguments or contract violations, 2 I/O
failures, 3 unreadable or inconsistent data files. Flags are validated
before any file is opened. Warnings (such as reference-box clipping) go
to standard error.

Data file formats are inferred from the file extension (.json or .csv);
--format overrides the choice for the written output file.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

import numpy as np

from . import dataio, render
from .attainment import TransformSpec, check_levels, empirical_attainment_surfaces
from .errors import DataError, FormatError, ValidationError
from .hypervolume import HvConfig, hv_over_time
from .pareto import as_point_set
from .synth import synthetic_runs

__all__ = ["run", "main"]


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on bad flags; that code belongs to I/O here
    def error(self, message: str):
        raise ValidationError(message)


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ValidationError(f"{flag} takes comma-separated integers, got {text!r}") from None


def _parse_ref(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValidationError(f"--ref takes two comma-separated numbers, got {text!r}")
    try:
        return np.array([float(p) for p in parts])
    except ValueError:
        raise ValidationError(f"--ref takes two comma-separated numbers, got {text!r}") from None


def _parse_size(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    try:
        w, h = (int(p) for p in parts)
    except ValueError:
        raise ValidationError(f"--size takes WIDTHxHEIGHT, got {text!r}") from None
    return w, h


def _infer_format(path: str, override: str | None, flag: str) -> str:
    if override is not None:
        return override
    lowered = path.lower()
    if lowered.endswith(".json"):
        return "json"
    if lowered.endswith(".csv"):
        return "csv"
    raise ValidationError(
        f"cannot infer a format for {flag} {path!r}; use a .json/.csv name or --format"
    )


def _transform_from_args(args) -> TransformSpec:
    maximize = _parse_int_list(args.maximize, "--maximize") if args.maximize else []
    log = _parse_int_list(args.log, "--log") if getattr(args, "log", None) else []
    return TransformSpec.of(maximize, log)


def _load_true_pf(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(doc, list):
        raise FormatError(f"{path}: expected a JSON array of [f1, f2] points")
    try:
        return as_point_set(doc, m=2)
    except ValidationError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def _cmd_eaf_compute(args) -> int:
    levels = check_levels(_parse_int_list(args.levels, "--levels"))
    transform = _transform_from_args(args)
    runs_format = _infer_format(args.runs, None, "--runs")
    out_format = _infer_format(args.out, args.format, "--out")
    archive = dataio.read_runs(args.runs, runs_format)
    stack = empirical_attainment_surfaces(archive.costs, levels, transform)
    dataio.write_surfaces(stack, args.out, out_format)
    print(f"wrote {stack.n_levels} surfaces over {stack.grid.shape[0]} grid values to {args.out}")
    return 0


def _cmd_eaf_plot(args) -> int:
    colors = args.colors.split(",")
    labels = args.labels.split(",")
    line_styles = args.line_styles.split(",") if args.line_styles else None
    markers = args.markers.split(",") if args.markers else None
    render.series_styles(colors, labels, line_styles, markers)  # fail before file I/O
    size = _parse_size(args.size)
    surfs_format = _infer_format(args.surfs, None, "--surfs")
    stack = dataio.read_surfaces(args.surfs, surfs_format)
    spec = render.surface_plot_spec(
        stack,
        colors,
        labels,
        line_styles=line_styles,
        markers=markers,
        title=args.title,
        x_label=args.x_label,
        y_label=args.y_label,
        size=size,
        x_min=args.x_min,
        x_max=args.x_max,
        y_min=args.y_min,
        y_max=args.y_max,
        x_log=True if args.x_log else None,
        y_log=True if args.y_log else None,
    )
    if args.band:
        render.plot_surface_with_band(stack, spec, args.out)
    else:
        render.plot_multiple_surfaces(stack, spec, args.out)
    print(f"wrote {args.out}")
    return 0


def _cmd_hv(args) -> int:
    ref = _parse_ref(args.ref)
    transform = _transform_from_args(args)
    if args.normalize and not args.true_pf:
        raise ValidationError("--normalize requires --true-pf")
    if not args.out and not args.plot:
        raise ValidationError("nothing to do: pass --out and/or --plot")
    if args.plot and not (args.color and args.label):
        raise ValidationError("--plot requires --color and --label")
    out_format = _infer_format(args.out, args.format, "--out") if args.out else None
    runs_format = _infer_format(args.runs, None, "--runs")

    archive = dataio.read_runs(args.runs, runs_format)
    true_pf = _load_true_pf(args.true_pf) if args.true_pf else None
    config = HvConfig(ref_point=ref, true_pareto_front=true_pf, transform=transform)
    traces = hv_over_time(archive.costs, config, normalize=args.normalize, band=args.band)
    if args.out:
        dataio.write_hv_traces(traces, args.out, out_format)
        print(f"wrote {traces.n_runs} traces of {traces.n_steps} steps to {args.out}")
    if args.plot:
        spec = render.hv_plot_spec(
            [args.color],
            [args.label],
            title=args.title,
            size=_parse_size(args.size),
        )
        render.plot_hv_with_band([traces], spec, args.plot)
        print(f"wrote {args.plot}")
    return 0


def _cmd_synth(args) -> int:
    out_format = _infer_format(args.out, args.format, "--out")
    archive = synthetic_runs(
        seed=args.seed, n_runs=args.n_runs, n_samples=args.n_samples, dim=args.dim
    )
    dataio.write_runs(archive, args.out, out_format)
    s, n, _ = archive.shape
    print(f"wrote {s} runs of {n} evaluations to {args.out}")
    return 0


def _add_axis_flags(parser: _Parser) -> None:
    parser.add_argument("--title", default="", help="figure title")
    parser.add_argument("--size", default="640x480", help="figure size as WIDTHxHEIGHT")


def _build_parser() -> _Parser:
    parser = _Parser(prog="eafkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    eaf = sub.add_parser("eaf", help="attainment surface commands")
    eaf_sub = eaf.add_subparsers(dest="eaf_command", required=True)

    compute = eaf_sub.add_parser("compute", help="compute attainment surfaces from runs")
    compute.add_argument("--runs", required=True, help="runs file (.json or .csv)")
    compute.add_argument("--levels", required=True, help="comma-separated attainment levels")
    compute.add_argument("--maximize", default="", help="objective indices to maximize")
    compute.add_argument("--log", default="", help="objective indices on a log scale")
    compute.add_argument("--out", required=True, help="output surfaces file")
    compute.add_argument("--format", choices=dataio.FORMATS, help="force the output format")
    compute.set_defaults(handler=_cmd_eaf_compute)

    plot = eaf_sub.add_parser("plot", help="draw surfaces to an SVG file")
    plot.add_argument("--surfs", required=True, help="surfaces file from 'eaf compute'")
    plot.add_argument("--band", action="store_true",
                      help="draw a 3-level stack as center line plus band")
    plot.add_argument("--colors", required=True, help="comma-separated series colors")
    plot.add_argument("--labels", required=True, help="comma-separated legend labels")
    plot.add_argument("--line-styles", default="",
                      help=f"comma-separated from {'/'.join(render.LINE_STYLES)}")
    plot.add_argument("--markers", default="",
                      help=f"comma-separated from {'/'.join(render.MARKERS)}")
    plot.add_argument("--x-label", default="f1")
    plot.add_argument("--y-label", default="f2")
    plot.add_argument("--x-min", type=float, default=None)
    plot.add_argument("--x-max", type=float, default=None)
    plot.add_argument("--y-min", type=float, default=None)
    plot.add_argument("--y-max", type=float, default=None)
    plot.add_argument("--x-log", action="store_true", help="force a log x axis")
    plot.add_argument("--y-log", action="store_true", help="force a log y axis")
    _add_axis_flags(plot)
    plot.add_argument("--out", required=True, help="output SVG path")
    plot.set_defaults(handler=_cmd_eaf_plot)

    hv = sub.add_parser("hv", help="hypervolume over evaluations")
    hv.add_argument("--runs", required=True, help="runs file (.json or .csv)")
    hv.add_argument("--ref", required=True, help="reference point as Y1,Y2")
    hv.add_argument("--maximize", default="", help="objective indices to maximize")
    hv.add_argument("--normalize", action="store_true",
                    help="rescale objectives so the true front maps to 0 and the ref to 1")
    hv.add_argument("--true-pf", default="",
                    help="JSON array of true Pareto front points [f1, f2]")
    hv.add_argument("--band", choices=("stderr", "stddev"), default="stderr",
                    help="half-width statistic for the cross-run band")
    hv.add_argument("--out", default="", help="output traces file")
    hv.add_argument("--format", choices=dataio.FORMATS, help="force the output format")
    hv.add_argument("--plot", default="", help="also draw the curve to this SVG path")
    hv.add_argument("--color", default="", help="series color for --plot")
    hv.add_argument("--label", default="", help="legend label for --plot")
    _add_axis_flags(hv)
    hv.set_defaults(handler=_cmd_hv)

    synth = sub.add_parser("synth", help="generate synthetic random-search runs")
    synth.add_argument("--seed", type=int, default=0)
    synth.add_argument("--n-runs", type=int, default=50)
    synth.add_argument("--n-samples", type=int, default=20)
    synth.add_argument("--dim", type=int, default=3)
    synth.add_argument("--out", required=True, help="output runs file")
    synth.add_argument("--format", choices=dataio.FORMATS, help="force the output format")
    synth.set_defaults(handler=_cmd_synth)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    return args.handler(args)


def run(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code mapping."""
    warnings.simplefilter("always")
    try:
        return main(argv)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 3
