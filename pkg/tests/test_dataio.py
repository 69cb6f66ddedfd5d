import json
import math

import numpy as np
import pytest

from eafkit import (
    DataError,
    FormatError,
    HvConfig,
    HvTraceSet,
    RunArchive,
    TransformSpec,
    ValidationError,
    VersionError,
    empirical_attainment_surfaces,
    hv_over_time,
    read_hv_traces,
    read_runs,
    read_surfaces,
    write_hv_traces,
    write_runs,
    write_surfaces,
)

TWO_RUNS = np.array([[[1.0, 3.0], [3.0, 1.0]], [[2.0, 2.0], [2.0, 2.0]]])


def archive(costs=TWO_RUNS, **metadata):
    return RunArchive(costs=costs, metadata=metadata)


def test_error_hierarchy():
    assert issubclass(FormatError, DataError)
    assert issubclass(VersionError, FormatError)
    assert issubclass(DataError, ValueError)


def test_archive_validation():
    a = archive(seed="7")
    assert a.shape == (2, 2, 2)
    assert a.metadata == {"seed": "7"}
    with pytest.raises(ValueError):
        a.costs[0, 0, 0] = 9.0
    with pytest.raises(VersionError):
        RunArchive(costs=TWO_RUNS, metadata={}, schema_version=2)
    with pytest.raises(ValidationError):
        RunArchive(costs=TWO_RUNS, metadata={"k": 3})
    with pytest.raises(DataError):
        RunArchive(costs=[[[math.nan, 1.0]]], metadata={})


def test_runs_json_round_trip(tmp_path, rng):
    path = tmp_path / "runs.json"
    for _ in range(10):
        s, n, m = (int(v) for v in rng.integers(1, 5, size=3))
        costs = rng.uniform(-50, 50, size=(s, n, m))
        a = archive(costs, generator="uniform")
        write_runs(a, path, "json")
        b = read_runs(path, "json")
        assert np.array_equal(b.costs, a.costs)
        assert b.metadata == a.metadata
        assert b.schema_version == 1


def test_runs_reject_infinities(tmp_path):
    # sentinels live only in derived surfaces, never in raw observations
    with pytest.raises(DataError):
        archive(np.array([[[1.0, math.inf]]]))
    path = tmp_path / "runs.json"
    doc = {
        "schema_version": 1,
        "shape": [1, 1, 2],
        "metadata": {},
        "costs": [[[1.0, "inf"]]],
    }
    path.write_text(json.dumps(doc))
    with pytest.raises(DataError):
        read_runs(path, "json")


def test_runs_json_layout(tmp_path):
    path = tmp_path / "runs.json"
    write_runs(archive(note="x"), path, "json")
    doc = json.loads(path.read_text())
    assert doc["schema_version"] == 1
    assert doc["shape"] == [2, 2, 2]
    assert doc["metadata"] == {"note": "x"}
    assert doc["costs"][0][0] == [1.0, 3.0]


def test_runs_csv_round_trip(tmp_path, rng):
    path = tmp_path / "runs.csv"
    costs = rng.uniform(-5, 5, size=(3, 4, 2))
    write_runs(archive(costs), path, "csv")
    back = read_runs(path, "csv")
    assert np.array_equal(back.costs, costs)
    lines = path.read_text().splitlines()
    assert lines[0] == "run,step,f1,f2"
    assert len(lines) == 1 + 3 * 4
    assert lines[1].startswith("0,1,")


def test_runs_csv_drops_metadata(tmp_path):
    path = tmp_path / "runs.csv"
    write_runs(archive(note="lost"), path, "csv")
    assert read_runs(path, "csv").metadata == {}


def test_runs_csv_requires_two_objectives(tmp_path):
    with pytest.raises(ValidationError):
        write_runs(archive(np.zeros((1, 1, 3))), tmp_path / "r.csv", "csv")


def test_runs_csv_ragged_names_run(tmp_path):
    path = tmp_path / "runs.csv"
    path.write_text("run,step,f1,f2\n0,1,1.0,2.0\n0,2,1.0,2.0\n1,1,3.0,4.0\n")
    with pytest.raises(FormatError, match="run 1"):
        read_runs(path, "csv")


def test_runs_csv_step_order_enforced(tmp_path):
    path = tmp_path / "runs.csv"
    path.write_text("run,step,f1,f2\n0,2,1.0,2.0\n0,1,1.0,2.0\n")
    with pytest.raises(FormatError):
        read_runs(path, "csv")


def test_runs_csv_bad_header(tmp_path):
    path = tmp_path / "runs.csv"
    path.write_text("run,step,a,b\n0,1,1.0,2.0\n")
    with pytest.raises(FormatError, match="header"):
        read_runs(path, "csv")


def test_runs_json_wrong_version(tmp_path):
    path = tmp_path / "runs.json"
    write_runs(archive(), path, "json")
    doc = json.loads(path.read_text())
    doc["schema_version"] = 99
    path.write_text(json.dumps(doc))
    with pytest.raises(VersionError, match="99"):
        read_runs(path, "json")


def test_runs_json_malformed(tmp_path):
    path = tmp_path / "runs.json"
    path.write_text("{not json")
    with pytest.raises(FormatError):
        read_runs(path, "json")
    path.write_text("[1, 2]")
    with pytest.raises(FormatError):
        read_runs(path, "json")
    path.write_text('{"schema_version": 1, "shape": [1, 1, 2], "metadata": {}}')
    with pytest.raises(FormatError, match="costs"):
        read_runs(path, "json")
    # metadata is optional on read
    path.write_text('{"schema_version": 1, "shape": [1, 1, 2], "costs": [[[1, 2]]]}')
    assert read_runs(path, "json").metadata == {}


def test_runs_json_shape_mismatch(tmp_path):
    path = tmp_path / "runs.json"
    doc = {
        "schema_version": 1,
        "shape": [2, 1, 2],
        "metadata": {},
        "costs": [[[1.0, 2.0]]],
    }
    path.write_text(json.dumps(doc))
    with pytest.raises(FormatError):
        read_runs(path, "json")


def test_runs_json_nan_cell(tmp_path):
    path = tmp_path / "runs.json"
    doc = {
        "schema_version": 1,
        "shape": [1, 1, 2],
        "metadata": {},
        "costs": [[[1.0, "nan"]]],
    }
    path.write_text(json.dumps(doc))
    with pytest.raises(DataError):
        read_runs(path, "json")


def test_missing_file_is_oserror(tmp_path):
    with pytest.raises(OSError):
        read_runs(tmp_path / "absent.json", "json")
    with pytest.raises(OSError):
        write_runs(archive(), tmp_path / "no" / "dir" / "r.json", "json")


def test_unknown_format_rejected(tmp_path):
    with pytest.raises(ValidationError):
        write_runs(archive(), tmp_path / "r.xml", "xml")
    with pytest.raises(ValidationError):
        read_runs(tmp_path / "r.xml", "xml")


def surfaces_stack(transform=None):
    t = transform if transform is not None else TransformSpec()
    return empirical_attainment_surfaces(TWO_RUNS, [1, 2], t)


def test_surfaces_json_round_trip(tmp_path):
    stack = surfaces_stack()
    path = tmp_path / "surf.json"
    write_surfaces(stack, path, "json")
    back = read_surfaces(path, "json")
    assert np.array_equal(back.grid, stack.grid)
    assert np.array_equal(back.surfaces, stack.surfaces)
    assert back.levels == stack.levels
    assert back.transform == stack.transform


def test_surfaces_json_keeps_transform(tmp_path):
    t = TransformSpec.of([1], [0])
    costs = np.abs(TWO_RUNS) * np.array([1.0, -1.0])
    stack = empirical_attainment_surfaces(costs, [1, 2], t)
    path = tmp_path / "surf.json"
    write_surfaces(stack, path, "json")
    back = read_surfaces(path, "json")
    assert back.transform == t
    assert np.array_equal(back.surfaces, stack.surfaces)


def test_surfaces_json_sentinels_as_strings(tmp_path):
    path = tmp_path / "surf.json"
    write_surfaces(surfaces_stack(), path, "json")
    doc = json.loads(path.read_text())
    assert doc["grid"][0] == "-inf"
    assert doc["grid"][-1] == "inf"
    assert doc["levels"] == [1, 2]


def test_surfaces_csv_round_trip(tmp_path):
    stack = surfaces_stack()
    path = tmp_path / "surf.csv"
    write_surfaces(stack, path, "csv")
    back = read_surfaces(path, "csv")
    assert np.array_equal(back.grid, stack.grid)
    assert np.array_equal(back.surfaces, stack.surfaces)
    assert back.levels == stack.levels
    lines = path.read_text().splitlines()
    assert lines[0] == "level,y1,y2"
    assert len(lines) == 1 + 2 * stack.grid.size
    assert lines[1] == "1,-inf,inf"


def test_surfaces_csv_rejects_transform(tmp_path):
    costs = TWO_RUNS * np.array([1.0, -1.0])
    stack = empirical_attainment_surfaces(costs, [1], TransformSpec.of([1], []))
    with pytest.raises(ValidationError, match="orientation"):
        write_surfaces(stack, tmp_path / "surf.csv", "csv")


def test_surfaces_csv_uneven_blocks(tmp_path):
    path = tmp_path / "surf.csv"
    path.write_text("level,y1,y2\n1,-inf,inf\n1,inf,1.0\n2,-inf,inf\n")
    with pytest.raises(FormatError):
        read_surfaces(path, "csv")


def test_surfaces_json_invariants_rechecked(tmp_path):
    path = tmp_path / "surf.json"
    write_surfaces(surfaces_stack(), path, "json")
    doc = json.loads(path.read_text())
    doc["surfaces"][0][1][1] = -50.0  # break the staircase
    path.write_text(json.dumps(doc))
    with pytest.raises(FormatError):
        read_surfaces(path, "json")


def trace_set():
    return hv_over_time(TWO_RUNS, HvConfig(ref_point=[4.0, 4.0]))


def test_traces_json_round_trip(tmp_path):
    out = trace_set()
    path = tmp_path / "hv.json"
    write_hv_traces(out, path, "json")
    back = read_hv_traces(path, "json")
    assert np.array_equal(back.traces, out.traces)
    assert np.array_equal(back.center, out.center)
    assert np.array_equal(back.band_halfwidth, out.band_halfwidth)


def test_traces_csv_round_trip(tmp_path):
    out = trace_set()
    path = tmp_path / "hv.csv"
    write_hv_traces(out, path, "csv")
    back = read_hv_traces(path, "csv")
    assert np.array_equal(back.traces, out.traces)
    assert np.array_equal(back.center, out.center)
    assert np.array_equal(back.band_halfwidth, out.band_halfwidth)
    lines = path.read_text().splitlines()
    assert lines[0] == "step,run_0,run_1,center,stderr"
    assert lines[1].split(",")[0] == "1"
    assert len(lines) == 1 + out.n_steps


def test_traces_csv_header_scales_with_runs(tmp_path, rng):
    costs = rng.uniform(0, 5, size=(4, 3, 2))
    out = hv_over_time(costs, HvConfig(ref_point=[6.0, 6.0]))
    path = tmp_path / "hv.csv"
    write_hv_traces(out, path, "csv")
    header = path.read_text().splitlines()[0]
    assert header == "step,run_0,run_1,run_2,run_3,center,stderr"
    back = read_hv_traces(path, "csv")
    assert np.array_equal(back.traces, out.traces)


def test_traces_center_recomputed_on_load(tmp_path):
    path = tmp_path / "hv.csv"
    path.write_text("step,run_0,run_1,center,stderr\n1,1.0,3.0,99.0,1.0\n")
    back = read_hv_traces(path, "csv")
    assert back.center.tolist() == [2.0]
    jpath = tmp_path / "hv.json"
    write_hv_traces(trace_set(), jpath, "json")
    doc = json.loads(jpath.read_text())
    doc["center"] = [99.0, 99.0]
    jpath.write_text(json.dumps(doc))
    assert np.array_equal(read_hv_traces(jpath, "json").center, trace_set().center)


def test_traces_csv_step_gap(tmp_path):
    path = tmp_path / "hv.csv"
    path.write_text("step,run_0,center,stderr\n1,1.0,1.0,0.0\n3,2.0,2.0,0.0\n")
    with pytest.raises(FormatError, match="steps"):
        read_hv_traces(path, "csv")


def test_traces_csv_rejects_decreasing(tmp_path):
    path = tmp_path / "hv.csv"
    path.write_text("step,run_0,center,stderr\n1,2.0,2.0,0.0\n2,1.0,1.0,0.0\n")
    with pytest.raises(FormatError):
        read_hv_traces(path, "csv")


def test_traces_single_run_stderr_zero(tmp_path):
    out = hv_over_time(TWO_RUNS[:1], HvConfig(ref_point=[4.0, 4.0]))
    assert out.band_halfwidth.tolist() == [0.0, 0.0]
    path = tmp_path / "hv.csv"
    write_hv_traces(out, path, "csv")
    assert np.array_equal(read_hv_traces(path, "csv").band_halfwidth, out.band_halfwidth)


def test_float_cells_are_bit_exact(tmp_path, rng):
    # repr round-trip must survive awkward values
    costs = np.array([[[1 / 3, 0.1], [math.pi, 1e-300], [2.0**-1022, 1e300]]])
    path = tmp_path / "runs.csv"
    write_runs(RunArchive(costs=costs, metadata={}), path, "csv")
    assert np.array_equal(read_runs(path, "csv").costs, costs)


def test_csv_cell_rejects_garbage(tmp_path):
    path = tmp_path / "runs.csv"
    path.write_text("run,step,f1,f2\n0,1,1.0,two\n")
    with pytest.raises(FormatError, match="line 2"):
        read_runs(path, "csv")


def test_traces_set_from_file_is_frozen(tmp_path):
    path = tmp_path / "hv.json"
    write_hv_traces(trace_set(), path, "json")
    back = read_hv_traces(path, "json")
    assert isinstance(back, HvTraceSet)
    with pytest.raises(ValueError):
        back.traces[0, 0] = 0.0
