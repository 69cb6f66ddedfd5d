import numpy as np
import pytest

import oracles
from eafkit import (
    DataError,
    ValidationError,
    as_point,
    as_point_set,
    dominates,
    nondominated_filter,
    set_attains,
    weakly_dominates,
)
from eafkit.pareto import _filter_pairwise, _filter_sorted_2d


def test_dominance_basics():
    assert weakly_dominates([1, 2], [1, 2])
    assert weakly_dominates([1, 2], [2, 2])
    assert not weakly_dominates([1, 3], [2, 2])
    assert dominates([1, 2], [1, 3])
    assert not dominates([1, 2], [1, 2])
    assert not dominates([3, 1], [1, 3])


def test_dominance_dimension_mismatch():
    with pytest.raises(ValidationError):
        dominates([1, 2], [1, 2, 3])
    with pytest.raises(ValidationError):
        weakly_dominates([1], [1, 2])


def test_point_validation():
    with pytest.raises(DataError):
        as_point([1.0, float("nan")])
    with pytest.raises(ValidationError):
        as_point([])
    with pytest.raises(ValidationError):
        as_point([[1, 2]])
    with pytest.raises(ValidationError):
        as_point_set([[1, 2], [1, 2, 3]])


def test_dominance_matches_oracle(rng):
    for _ in range(500):
        m = int(rng.integers(1, 5))
        a = rng.integers(0, 4, size=m).astype(float)
        b = rng.integers(0, 4, size=m).astype(float)
        assert weakly_dominates(a, b) == oracles.weakly_dominates(a, b)
        assert dominates(a, b) == oracles.strictly_dominates(a, b)


def test_dominance_order_properties(rng):
    # antisymmetry and transitivity of strict dominance
    for _ in range(300):
        pts = rng.integers(0, 5, size=(3, 2)).astype(float)
        a, b, c = pts
        assert not (dominates(a, b) and dominates(b, a))
        if dominates(a, b) and dominates(b, c):
            assert dominates(a, c)


def test_filter_two_objectives_frozen():
    pts = [[1, 3], [3, 1], [2, 2], [2, 2], [3, 3], [0, 5]]
    out = nondominated_filter(pts)
    assert out.tolist() == [[0, 5], [1, 3], [2, 2], [3, 1]]


def test_filter_collapses_duplicates():
    out = nondominated_filter([[1, 1], [1, 1], [1, 1]])
    assert out.tolist() == [[1, 1]]


def test_filter_matches_oracle(rng):
    for _ in range(400):
        n = int(rng.integers(1, 20))
        pts = rng.integers(0, 8, size=(n, 2)).astype(float)
        got = [tuple(p) for p in nondominated_filter(pts)]
        assert got == oracles.pareto_front(pts)


def test_filter_pairwise_matches_sweep(rng):
    # the 2D fast path and the general-M path must agree entry for entry
    for _ in range(300):
        n = int(rng.integers(1, 25))
        pts = rng.integers(0, 6, size=(n, 2)).astype(float)
        ordered = np.lexsort((pts[:, 1], pts[:, 0]))
        assert np.array_equal(_filter_sorted_2d(pts[ordered]), _filter_pairwise(pts))


def test_filter_three_objectives(rng):
    for _ in range(150):
        n = int(rng.integers(1, 15))
        pts = rng.integers(0, 5, size=(n, 3)).astype(float)
        got = [tuple(p) for p in nondominated_filter(pts)]
        assert got == oracles.pareto_front(pts)


def test_filter_output_invariants(rng):
    for _ in range(100):
        pts = rng.uniform(-5, 5, size=(int(rng.integers(1, 30)), 2))
        out = nondominated_filter(pts)
        xs = out[:, 0]
        assert np.all(np.diff(xs) > 0)
        assert np.all(np.diff(out[:, 1]) < 0) or out.shape[0] == 1


def test_filter_idempotent(rng):
    for _ in range(100):
        pts = rng.integers(0, 10, size=(12, 2)).astype(float)
        once = nondominated_filter(pts)
        assert np.array_equal(once, nondominated_filter(once))


def test_set_attains():
    front = np.array([[1.0, 3.0], [3.0, 1.0]])
    assert set_attains(front, [2, 3])
    assert set_attains(front, [1, 3])
    assert not set_attains(front, [0, 0])
    assert not set_attains(np.empty((0, 2)), [5, 5])


def test_filter_rejects_bad_input():
    with pytest.raises(DataError):
        nondominated_filter([[1, float("nan")]])
    with pytest.raises(ValidationError):
        nondominated_filter([[1, 2], [3]])
