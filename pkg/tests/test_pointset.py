"""PointSet storage semantics: dedup, geometry props, file round-trip."""

import math

import numpy as np
import pytest

from fracdim.pointset import (PointSet, make_pointset, read_points,
                              write_points)

REL_TOL = 1e-12


def test_dedup_keeps_first_occurrence_order():
    ps = make_pointset([3.0, 1.0, 3.0, 2.0, 1.0])
    assert np.array_equal(ps.points[:, 0], [3.0, 1.0, 2.0])
    assert ps.size == 3 and ps.dim == 1


def test_no_epsilon_merging():
    a = 0.1 + 0.2          # 0.30000000000000004
    ps = make_pointset([a, 0.3])
    assert ps.size == 2


def test_points_are_read_only():
    ps = make_pointset([0.0, 1.0])
    with pytest.raises(ValueError):
        ps.points[0, 0] = 5.0


def test_rejects_nonfinite():
    with pytest.raises(ValueError):
        make_pointset([0.0, math.inf])
    with pytest.raises(ValueError):
        make_pointset([[0.0, math.nan]])


def test_geometry_1d():
    ps = make_pointset([0.0, 0.25, 1.0])
    assert ps.diameter == 1.0
    assert ps.min_gap == 0.25
    assert make_pointset([]).diameter == 0.0
    assert make_pointset([7.0]).min_gap == 0.0


def test_geometry_2d_brute():
    ps = make_pointset([[0.0, 0.0], [3.0, 4.0], [0.0, 1.0]])
    assert math.isclose(ps.diameter, 5.0, rel_tol=REL_TOL)
    assert math.isclose(ps.min_gap, 1.0, rel_tol=REL_TOL)


def test_contains_is_exact():
    ps = make_pointset([0.1, 0.2])
    assert ps.contains(0.1)
    assert not ps.contains(np.nextafter(0.1, 1.0))  # one ulp off
    assert not ps.contains(0.10000000001)
    assert not ps.contains([0.1, 0.2])  # wrong arity


def test_roundtrip_csv_and_json(tmp_path):
    pts = [0.0, 1.0 / 3.0, math.pi, 1e-300, 123456.789]
    ps = make_pointset(pts, label="rt")
    for ext in ("csv", "json"):
        path = str(tmp_path / f"rt.{ext}")
        write_points(ps, path)
        back = read_points(path)
        assert np.array_equal(back.points, ps.points)
    # labels survive json, csv keeps them only in the comment header
    assert read_points(str(tmp_path / "rt.json")).label == "rt"


def test_roundtrip_2d_and_empty(tmp_path):
    ps = make_pointset([[0.0, 1.5], [2.0, -1.0]], label="plane")
    path = str(tmp_path / "p.json")
    write_points(ps, path)
    back = read_points(path)
    assert back.dim == 2 and np.array_equal(back.points, ps.points)
    empty = make_pointset([])
    for ext in ("csv", "json"):
        path = str(tmp_path / f"e.{ext}")
        write_points(empty, path)
        assert read_points(path).size == 0


def test_coords_sorted_cached_and_1d_only():
    ps = make_pointset([2.0, 0.0, 1.0])
    srt = ps.coords_sorted()
    assert np.array_equal(srt, [0.0, 1.0, 2.0])
    assert ps.coords_sorted() is srt
    plane = make_pointset([[0.0, 0.0]])
    with pytest.raises(ValueError):
        plane.coords_sorted()
