"""Deterministic generators for the calibration point sets.

Every generator maps integer parameters to the same float64 array on every
call and platform: spacings are computed once per block through exp/log and
points are accumulated with a single multiply-add, so no accumulation-order
ambiguity exists.
"""

from __future__ import annotations

import math

import numpy as np

from .pointset import PointSet, make_pointset


def delta_example_e(n: int) -> float:
    """Block spacing n**-(1 + 1/(n-1)) for the sparse-block line set."""
    if n < 2:
        raise ValueError("block index must be >= 2")
    return math.exp(-(1.0 + 1.0 / (n - 1)) * math.log(n))


def delta_ek(k: int, n: int) -> float:
    """Row spacing n**(-k/(k-1)) for the k-parameter row family."""
    if k < 2:
        raise ValueError("family parameter k must be >= 2")
    if n < 1:
        raise ValueError("row index must be >= 1")
    if n == 1:
        return 1.0
    return math.exp(-(k / (k - 1.0)) * math.log(n))


def gen_example_e(n_max: int, label: str = "") -> PointSet:
    """Blocks {n + i*delta_n : 0 <= i <= n} for n = 2..n_max.

    Block n is an arithmetic progression of n+1 points starting at the
    integer n, with total width n*delta_n < 1, so blocks never touch.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    parts = []
    for n in range(2, n_max + 1):
        d = delta_example_e(n)
        parts.append(n + np.arange(n + 1, dtype=float) * d)
    pts = np.concatenate(parts)
    return make_pointset(pts, label=label or f"E({n_max})")


def gen_ek(k: int, n_max: int, label: str = "") -> PointSet:
    """Rows {i*delta : 0 <= i <= n, delta = n**(-k/(k-1))} for n = 1..n_max.

    All rows live in [0, 1]; duplicate coordinates across rows collapse.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    parts = []
    for n in range(1, n_max + 1):
        d = delta_ek(k, n)
        parts.append(np.arange(n + 1, dtype=float) * d)
    pts = np.concatenate(parts)
    return make_pointset(pts, label=label or f"E_{k}({n_max})")


def gen_egb_union(i_max: int, n_max: int, label: str = "") -> PointSet:
    """Union of translated row families: block i is gen_ek(i, n_max) + i.

    Blocks sit in [i, i+1] for i = 2..i_max and meet only at integer
    endpoints, which deduplicate exactly.
    """
    if i_max < 2:
        raise ValueError("i_max must be >= 2")
    parts = [gen_ek(i, n_max).points[:, 0] + i for i in range(2, i_max + 1)]
    pts = np.concatenate(parts)
    return make_pointset(pts, label=label or f"EGB({i_max},{n_max})")


def gen_cantor_midpoints(level: int, label: str = "") -> PointSet:
    """Midpoints of the 2**level middle-thirds intervals at depth level.

    Interval left ends are integers in units of 3**-level, so midpoints
    (2*v + 1) / (2 * 3**level) are computed from exact integer numerators.
    """
    if level < 1:
        raise ValueError("level must be >= 1")
    lefts = np.array([0], dtype=np.int64)
    for _ in range(level):
        lefts = np.concatenate([3 * lefts, 3 * lefts + 2])
    lefts.sort()
    denom = 2.0 * (3.0 ** level)
    pts = (2.0 * lefts.astype(float) + 1.0) / denom
    return make_pointset(pts, label=label or f"cantor-{level}")


def gen_poly_sequence(p: float, n_max: int, label: str = "") -> PointSet:
    """The convergent sequence {0} union {n**-p : n = 1..n_max}."""
    if p <= 0:
        raise ValueError("exponent p must be positive")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    n = np.arange(1, n_max + 1, dtype=float)
    pts = np.concatenate([[0.0], np.exp(-p * np.log(n))])
    return make_pointset(pts, label=label or f"poly-{p:g}({n_max})")


def gen_uniform_grid(count: int, label: str = "") -> PointSet:
    """count equally spaced points spanning [0, 1]."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if count == 1:
        pts = np.array([0.0])
    else:
        pts = np.linspace(0.0, 1.0, count)
    return make_pointset(pts, label=label or f"grid-{count}")


def affine_image(ps: PointSet, scale: float, offset=0.0,
                 label: str = "") -> PointSet:
    """Image of ps under x -> scale*x + offset applied per coordinate."""
    if scale == 0:
        raise ValueError("scale must be nonzero")
    off = np.asarray(offset, dtype=float)
    pts = ps.points * float(scale) + off
    return make_pointset(pts, label=label or f"{ps.label}|affine")


def set_union(a: PointSet, b: PointSet, label: str = "") -> PointSet:
    if a.dim != b.dim:
        raise ValueError("union requires equal ambient dimensions")
    pts = np.concatenate([a.points, b.points], axis=0)
    return make_pointset(pts, label=label or f"{a.label}+{b.label}")


def set_product(a: PointSet, b: PointSet, label: str = "") -> PointSet:
    """Cartesian product with concatenated coordinates."""
    left = np.repeat(a.points, b.size, axis=0)
    right = np.tile(b.points, (a.size, 1))
    pts = np.concatenate([left, right], axis=1)
    return make_pointset(pts, label=label or f"{a.label}x{b.label}")
