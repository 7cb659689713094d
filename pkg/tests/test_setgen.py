"""Generator unit tests: sizes, exact coordinates, spacings, labels."""

import math

import numpy as np
import pytest

from fracdim.setgen import (affine_image, delta_ek, delta_example_e,
                            gen_cantor_midpoints, gen_egb_union, gen_ek,
                            gen_example_e, gen_poly_sequence,
                            gen_uniform_grid, set_product, set_union)

REL_TOL = 1e-12


def test_delta_example_e_values():
    assert math.isclose(delta_example_e(2), 0.25, rel_tol=REL_TOL)
    # spacing n**-(1 + 1/(n-1)) makes the block width n*delta = n**(-1/(n-1))
    for n in (2, 5, 50, 2000):
        d = delta_example_e(n)
        width = n * d
        assert math.isclose(width, math.exp(-math.log(n) / (n - 1)),
                            rel_tol=REL_TOL)
        assert 0.0 < width < 1.0
    with pytest.raises(ValueError):
        delta_example_e(1)


def test_delta_ek_values():
    assert delta_ek(2, 1) == 1.0
    assert math.isclose(delta_ek(2, 10), 0.01, rel_tol=REL_TOL)
    assert math.isclose(delta_ek(3, 8), 8.0 ** -1.5, rel_tol=REL_TOL)
    with pytest.raises(ValueError):
        delta_ek(1, 5)
    with pytest.raises(ValueError):
        delta_ek(2, 0)


def test_gen_example_e_structure():
    ps = gen_example_e(10)
    # blocks n = 2..10 contribute n+1 points each and never collide
    assert ps.size == sum(n + 1 for n in range(2, 11)) == 63
    assert ps.label == "E(10)"
    assert ps.contains(2.0) and ps.contains(10.0)
    # block 4 is 4 + i*delta_4, i = 0..4
    d4 = delta_example_e(4)
    for i in range(5):
        assert ps.contains(4.0 + i * d4)
    with pytest.raises(ValueError):
        gen_example_e(1)


def test_gen_example_e_block_containment():
    ps = gen_example_e(30)
    pts = ps.points[:, 0]
    # every block stays inside [n, n+1), so floor recovers the block index
    blocks = np.floor(pts)
    assert blocks.min() == 2 and blocks.max() == 30
    for n in (2, 17, 30):
        width = (pts[blocks == n].max() - n)
        assert width < 1.0


def test_gen_ek_small_cases():
    ps = gen_ek(2, 1)
    assert ps.size == 2
    assert np.array_equal(np.sort(ps.points[:, 0]), [0.0, 1.0])
    # rows n = 1..3 share only the coordinate 0
    ps = gen_ek(2, 3)
    assert ps.size == (2 + 3 + 4) - 2
    assert ps.label == "E_2(3)"
    assert ps.contains(0.0) and ps.contains(1.0)


def test_gen_egb_union_blocks():
    ps = gen_egb_union(3, 1)
    assert np.array_equal(np.sort(ps.points[:, 0]), [2.0, 3.0, 4.0])
    ps = gen_egb_union(4, 10)
    assert ps.label == "EGB(4,10)"
    blocks = np.floor(ps.points[:, 0])
    # right endpoints i+1 fold into the next block's left endpoint
    assert set(np.unique(blocks)) == {2.0, 3.0, 4.0, 5.0}
    with pytest.raises(ValueError):
        gen_egb_union(1, 5)


def test_gen_cantor_exact_midpoints():
    ps = gen_cantor_midpoints(1)
    assert np.array_equal(np.sort(ps.points[:, 0]),
                          np.array([1.0, 5.0]) / 6.0)
    ps = gen_cantor_midpoints(2)
    assert np.array_equal(np.sort(ps.points[:, 0]),
                          np.array([1.0, 5.0, 13.0, 17.0]) / 18.0)
    assert ps.label == "cantor-2"
    with pytest.raises(ValueError):
        gen_cantor_midpoints(0)


def test_gen_cantor_counts_and_gaps():
    for level in (3, 6, 10):
        ps = gen_cantor_midpoints(level)
        assert ps.size == 2 ** level
        assert 0.0 < ps.points.min() and ps.points.max() < 1.0
        # closest midpoints straddle a removed middle third of width 3**-level
        assert math.isclose(ps.min_gap, 2.0 * 3.0 ** -level, rel_tol=REL_TOL)


def test_gen_poly_sequence():
    ps = gen_poly_sequence(1, 10)
    assert ps.size == 11
    assert ps.contains(0.0) and ps.contains(1.0)
    assert math.isclose(ps.min_gap, 1.0 / 90.0, rel_tol=1e-9)
    assert ps.label == "poly-1(10)"
    ps2 = gen_poly_sequence(2, 100)
    vals = np.sort(ps2.points[:, 0])
    assert math.isclose(vals[1], 100.0 ** -2, rel_tol=REL_TOL)
    with pytest.raises(ValueError):
        gen_poly_sequence(0, 10)
    with pytest.raises(ValueError):
        gen_poly_sequence(-1.0, 10)


def test_gen_uniform_grid():
    ps = gen_uniform_grid(5)
    assert np.array_equal(np.sort(ps.points[:, 0]),
                          [0.0, 0.25, 0.5, 0.75, 1.0])
    assert gen_uniform_grid(1).size == 1
    assert gen_uniform_grid(1024).min_gap == pytest.approx(1.0 / 1023.0,
                                                           rel=REL_TOL)
    with pytest.raises(ValueError):
        gen_uniform_grid(0)


def test_affine_image():
    ps = gen_uniform_grid(3)
    img = affine_image(ps, 2.0, 1.0)
    assert np.array_equal(np.sort(img.points[:, 0]), [1.0, 2.0, 3.0])
    assert math.isclose(img.diameter, 2.0 * ps.diameter, rel_tol=REL_TOL)
    neg = affine_image(ps, -1.0)
    assert math.isclose(neg.diameter, ps.diameter, rel_tol=REL_TOL)
    with pytest.raises(ValueError):
        affine_image(ps, 0.0)


def test_set_union_and_product():
    a = gen_uniform_grid(3, label="a")
    b = affine_image(a, 1.0, 0.5, label="b")
    u = set_union(a, b)
    assert u.size == 4  # 0.5 and 1.0 collide exactly
    p = set_product(a, a)
    assert p.size == 9 and p.dim == 2
    with pytest.raises(ValueError):
        set_union(a, p)


def test_generators_are_deterministic():
    for build in (lambda: gen_example_e(40), lambda: gen_ek(3, 40),
                  lambda: gen_cantor_midpoints(8),
                  lambda: gen_poly_sequence(1.5, 500)):
        x, y = build(), build()
        assert np.array_equal(x.points, y.points)
