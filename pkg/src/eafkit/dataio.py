"""Interchange formats for run tensors, surface stacks, and HV traces.

Two formats are supported. JSON carries full structure (shapes, levels,
orientation flags, metadata) and is the lossless archival form. CSV carries
the numeric payload only, for spreadsheet interop; anything a flat table
cannot express (metadata, non-identity orientation) must go through JSON.

Numbers are written in their shortest form that parses back to the same
float, so write-then-read is bit-exact. JSON has no literal for infinity,
so nonfinite values are encoded as the strings "-inf" / "inf"; CSV parses
those spellings natively via float().
"""

from __future__ import annotations

import csv
import json
import math
import operator
from dataclasses import dataclass, field

import numpy as np

from .attainment import SurfaceStack, TransformSpec, as_run_tensor
from .errors import DataError, FormatError, ValidationError, VersionError
from .hypervolume import HvTraceSet

__all__ = [
    "SCHEMA_VERSION",
    "RunArchive",
    "read_runs",
    "write_runs",
    "read_surfaces",
    "write_surfaces",
    "read_hv_traces",
    "write_hv_traces",
]

SCHEMA_VERSION = 1

FORMATS = ("json", "csv")


def _check_format(format: str) -> str:
    if format not in FORMATS:
        raise ValidationError(f"format must be one of {FORMATS}, got {format!r}")
    return format


@dataclass(frozen=True)
class RunArchive:
    """A run tensor plus free-form provenance strings.

    ``metadata`` holds whatever the producer wants to record (optimizer
    name, seed list, problem id) as a flat string-to-string map.
    """

    costs: np.ndarray
    metadata: dict[str, str] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def __post_init__(self) -> None:
        costs = as_run_tensor(self.costs)
        costs.setflags(write=False)
        object.__setattr__(self, "costs", costs)
        version = operator.index(self.schema_version)
        if version != SCHEMA_VERSION:
            raise VersionError(
                f"unsupported schema version {version}; this build reads version {SCHEMA_VERSION}"
            )
        object.__setattr__(self, "schema_version", version)
        meta = dict(self.metadata)
        for key, value in meta.items():
            if not isinstance(key, str) or not isinstance(value, str):
                raise ValidationError(
                    f"metadata must map strings to strings, got {key!r}: {value!r}"
                )
        object.__setattr__(self, "metadata", meta)

    @property
    def shape(self) -> tuple[int, int, int]:
        return self.costs.shape


# -- float <-> JSON scalar ---------------------------------------------------

def _encode_value(x: float):
    """JSON-safe scalar: floats stay floats, infinities become strings."""
    x = float(x)
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _decode_value(v, where: str) -> float:
    if isinstance(v, bool):
        raise FormatError(f"{where}: expected a number, got {v!r}")
    if isinstance(v, (int, float)):
        return float(v)
    if isinstance(v, str):
        try:
            return float(v)
        except ValueError:
            raise FormatError(f"{where}: cannot parse {v!r} as a number") from None
    raise FormatError(f"{where}: expected a number, got {type(v).__name__}")


def _encode_array(arr: np.ndarray):
    if arr.ndim == 1:
        return [_encode_value(x) for x in arr]
    return [_encode_array(row) for row in arr]


def _decode_array(v, shape: tuple[int, ...], where: str) -> np.ndarray:
    """Decode a nested list into exactly the declared shape."""
    if not isinstance(v, list) or len(v) != shape[0]:
        got = f"list of {len(v)}" if isinstance(v, list) else type(v).__name__
        raise FormatError(f"{where}: expected {shape[0]} entries, got {got}")
    if len(shape) == 1:
        return np.array([_decode_value(x, where) for x in v], dtype=float)
    if shape[0] == 0:
        return np.zeros(shape)
    return np.stack([_decode_array(row, shape[1:], f"{where}[{i}]") for i, row in enumerate(v)])


def _parse_json(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise FormatError(f"{path}: top level must be an object")
    return doc


def _require(doc: dict, key: str, path) -> object:
    if key not in doc:
        raise FormatError(f"{path}: missing required field {key!r}")
    return doc[key]


def _check_version(doc: dict, path) -> int:
    version = _require(doc, "schema_version", path)
    if not isinstance(version, int) or isinstance(version, bool):
        raise FormatError(f"{path}: schema_version must be an integer, got {version!r}")
    if version != SCHEMA_VERSION:
        raise VersionError(
            f"{path}: unsupported schema version {version}; "
            f"this build reads version {SCHEMA_VERSION}"
        )
    return version


def _dump_json(doc: dict, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        json.dump(doc, fh, indent=2, allow_nan=False)
        fh.write("\n")


def _parse_float_cell(text: str, where: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise FormatError(f"{where}: cannot parse {text!r} as a number") from None
    return value


def _parse_int_cell(text: str, where: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise FormatError(f"{where}: cannot parse {text!r} as an integer") from None


def _read_csv_rows(path, expected_header: list[str]) -> list[list[str]]:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != expected_header:
        raise FormatError(
            f"{path}: expected header {','.join(expected_header)}, "
            f"got {','.join(rows[0]) if rows else 'an empty file'}"
        )
    width = len(expected_header)
    for i, row in enumerate(rows[1:], start=2):
        if len(row) != width:
            raise FormatError(f"{path}: line {i}: expected {width} cells, got {len(row)}")
    return rows[1:]


def _csv_writer(fh):
    return csv.writer(fh, lineterminator="\n")


# -- run archives -------------------------------------------------------------

def write_runs(archive: RunArchive, path, format: str = "json") -> None:
    """Write a RunArchive. CSV keeps the tensor only and requires M = 2."""
    _check_format(format)
    if format == "json":
        doc = {
            "schema_version": archive.schema_version,
            "shape": list(archive.shape),
            "costs": _encode_array(archive.costs),
            "metadata": archive.metadata,
        }
        _dump_json(doc, path)
        return
    if archive.shape[2] != 2:
        raise ValidationError(
            f"CSV run files hold exactly 2 objectives, got {archive.shape[2]}; use JSON"
        )
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = _csv_writer(fh)
        writer.writerow(["run", "step", "f1", "f2"])
        for s in range(archive.shape[0]):
            for n in range(archive.shape[1]):
                writer.writerow(
                    [s, n + 1, repr(float(archive.costs[s, n, 0])), repr(float(archive.costs[s, n, 1]))]
                )


def _read_runs_json(path) -> RunArchive:
    doc = _parse_json(path)
    _check_version(doc, path)
    shape = _require(doc, "shape", path)
    if (
        not isinstance(shape, list)
        or len(shape) != 3
        or not all(isinstance(x, int) and not isinstance(x, bool) for x in shape)
    ):
        raise FormatError(f"{path}: shape must be a list of 3 integers, got {shape!r}")
    costs = _decode_array(_require(doc, "costs", path), tuple(shape), f"{path}: costs")
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise FormatError(f"{path}: metadata must be an object")
    try:
        return RunArchive(costs=costs, metadata=metadata, schema_version=SCHEMA_VERSION)
    except ValidationError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def _read_runs_csv(path) -> RunArchive:
    rows = _read_csv_rows(path, ["run", "step", "f1", "f2"])
    if not rows:
        raise FormatError(f"{path}: no data rows")
    runs: list[list[list[float]]] = []
    for i, row in enumerate(rows, start=2):
        where = f"{path}: line {i}"
        s = _parse_int_cell(row[0], where)
        n = _parse_int_cell(row[1], where)
        if s == len(runs):
            runs.append([])
        elif s != len(runs) - 1:
            raise FormatError(
                f"{where}: runs must appear grouped in order 0,1,...; got run {s}"
            )
        if n != len(runs[-1]) + 1:
            raise FormatError(
                f"{where}: run {s} steps must count 1..N in order; got step {n}"
            )
        runs[-1].append([_parse_float_cell(row[2], where), _parse_float_cell(row[3], where)])
    lengths = {len(r) for r in runs}
    if len(lengths) > 1:
        short = min(range(len(runs)), key=lambda s: len(runs[s]))
        raise FormatError(
            f"{path}: ragged runs: run {short} has {len(runs[short])} steps, "
            f"expected {max(lengths)}"
        )
    return RunArchive(costs=np.array(runs))


def read_runs(path, format: str = "json") -> RunArchive:
    """Read a RunArchive written by :func:`write_runs`."""
    _check_format(format)
    return _read_runs_json(path) if format == "json" else _read_runs_csv(path)


# -- surface stacks -----------------------------------------------------------

def _transform_to_doc(transform: TransformSpec) -> dict:
    return {
        "maximize_indices": sorted(transform.maximize_indices),
        "log_indices": sorted(transform.log_indices),
    }


def _transform_from_doc(doc: object, path) -> TransformSpec:
    if not isinstance(doc, dict):
        raise FormatError(f"{path}: transform must be an object")
    for key in doc:
        if key not in ("maximize_indices", "log_indices"):
            raise FormatError(f"{path}: unknown transform field {key!r}")
    def indices(key: str) -> list[int]:
        v = doc.get(key, [])
        if not isinstance(v, list) or not all(
            isinstance(x, int) and not isinstance(x, bool) for x in v
        ):
            raise FormatError(f"{path}: transform {key} must be a list of integers")
        return v
    try:
        return TransformSpec.of(indices("maximize_indices"), indices("log_indices"))
    except ValidationError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def write_surfaces(stack: SurfaceStack, path, format: str = "json") -> None:
    """Write a SurfaceStack. CSV drops orientation, so it requires identity."""
    _check_format(format)
    if format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "levels": list(stack.levels),
            "grid": _encode_array(stack.grid),
            "surfaces": _encode_array(stack.surfaces),
            "transform": _transform_to_doc(stack.transform),
        }
        _dump_json(doc, path)
        return
    if not stack.transform.is_identity:
        raise ValidationError(
            "CSV surface files carry no orientation flags; write stacks with "
            "maximize/log transforms as JSON"
        )
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = _csv_writer(fh)
        writer.writerow(["level", "y1", "y2"])
        for k, level in enumerate(stack.levels):
            for y1, y2 in stack.surfaces[k]:
                writer.writerow([level, repr(float(y1)), repr(float(y2))])


def _read_surfaces_json(path) -> SurfaceStack:
    doc = _parse_json(path)
    _check_version(doc, path)
    levels = _require(doc, "levels", path)
    if not isinstance(levels, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in levels
    ):
        raise FormatError(f"{path}: levels must be a list of integers")
    grid_doc = _require(doc, "grid", path)
    if not isinstance(grid_doc, list):
        raise FormatError(f"{path}: grid must be a list")
    grid = _decode_array(grid_doc, (len(grid_doc),), f"{path}: grid")
    surfaces = _decode_array(
        _require(doc, "surfaces", path),
        (len(levels), len(grid), 2),
        f"{path}: surfaces",
    )
    transform = _transform_from_doc(doc.get("transform", {}), path)
    try:
        return SurfaceStack(grid=grid, surfaces=surfaces, levels=tuple(levels), transform=transform)
    except ValidationError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def _read_surfaces_csv(path) -> SurfaceStack:
    rows = _read_csv_rows(path, ["level", "y1", "y2"])
    if not rows:
        raise FormatError(f"{path}: no data rows")
    levels: list[int] = []
    blocks: list[list[list[float]]] = []
    for i, row in enumerate(rows, start=2):
        where = f"{path}: line {i}"
        level = _parse_int_cell(row[0], where)
        if not levels or level != levels[-1]:
            levels.append(level)
            blocks.append([])
        blocks[-1].append([_parse_float_cell(row[1], where), _parse_float_cell(row[2], where)])
    sizes = {len(b) for b in blocks}
    if len(sizes) > 1:
        raise FormatError(f"{path}: level blocks differ in row count: {sorted(sizes)}")
    surfaces = np.array(blocks)
    try:
        return SurfaceStack(
            grid=surfaces[0, :, 0].copy(),
            surfaces=surfaces,
            levels=tuple(levels),
            transform=TransformSpec(),
        )
    except ValidationError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def read_surfaces(path, format: str = "json") -> SurfaceStack:
    """Read a SurfaceStack written by :func:`write_surfaces`."""
    _check_format(format)
    return _read_surfaces_json(path) if format == "json" else _read_surfaces_csv(path)


# -- hypervolume traces --------------------------------------------------------

def write_hv_traces(traces: HvTraceSet, path, format: str = "json") -> None:
    """Write an HvTraceSet: per-run columns plus center and half-width."""
    _check_format(format)
    if format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "traces": _encode_array(traces.traces),
            "center": _encode_array(traces.center),
            "band_halfwidth": _encode_array(traces.band_halfwidth),
        }
        _dump_json(doc, path)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = _csv_writer(fh)
        writer.writerow(
            ["step", *(f"run_{s}" for s in range(traces.n_runs)), "center", "stderr"]
        )
        for n in range(traces.n_steps):
            writer.writerow(
                [
                    n + 1,
                    *(repr(float(traces.traces[s, n])) for s in range(traces.n_runs)),
                    repr(float(traces.center[n])),
                    repr(float(traces.band_halfwidth[n])),
                ]
            )


def _read_hv_traces_json(path) -> HvTraceSet:
    doc = _parse_json(path)
    _check_version(doc, path)
    traces_doc = _require(doc, "traces", path)
    if not isinstance(traces_doc, list) or not traces_doc or not isinstance(traces_doc[0], list):
        raise FormatError(f"{path}: traces must be a nonempty list of per-run rows")
    shape = (len(traces_doc), len(traces_doc[0]))
    traces = _decode_array(traces_doc, shape, f"{path}: traces")
    _decode_array(_require(doc, "center", path), (shape[1],), f"{path}: center")
    half = _decode_array(
        _require(doc, "band_halfwidth", path), (shape[1],), f"{path}: band_halfwidth"
    )
    try:
        # the center column is recomputed from the run traces, not trusted
        return HvTraceSet(traces=traces, center=traces.mean(axis=0), band_halfwidth=half)
    except ValidationError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def _read_hv_traces_csv(path) -> HvTraceSet:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise FormatError(f"{path}: an empty file")
    header = rows[0]
    n_runs = len(header) - 3
    expected = ["step", *(f"run_{s}" for s in range(n_runs)), "center", "stderr"]
    if n_runs < 1 or header != expected:
        raise FormatError(
            f"{path}: expected header step,run_0,...,center,stderr, got {','.join(header)}"
        )
    data = []
    for i, row in enumerate(rows[1:], start=2):
        where = f"{path}: line {i}"
        if len(row) != len(header):
            raise FormatError(f"{where}: expected {len(header)} cells, got {len(row)}")
        if _parse_int_cell(row[0], where) != i - 1:
            raise FormatError(f"{where}: steps must count 1..N in order, got {row[0]}")
        data.append([_parse_float_cell(x, where) for x in row[1:]])
    if not data:
        raise FormatError(f"{path}: no data rows")
    table = np.array(data)
    try:
        traces = table[:, :n_runs].T.copy()
        # the center column is recomputed from the run traces, not trusted
        return HvTraceSet(
            traces=traces,
            center=traces.mean(axis=0),
            band_halfwidth=table[:, n_runs + 1].copy(),
        )
    except ValidationError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def read_hv_traces(path, format: str = "json") -> HvTraceSet:
    """Read an HvTraceSet written by :func:`write_hv_traces`."""
    _check_format(format)
    return _read_hv_traces_json(path) if format == "json" else _read_hv_traces_csv(path)
