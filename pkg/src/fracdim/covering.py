"""Grid covering counts and cover curves.

Cell indices come from the grid anchored at the origin with mesh delta:
cell_i = floor(x_i / delta).  Quotients within 1e-9 relative distance of an
integer are refloored with exact rational arithmetic on the float operands,
so counting laws hold as exact integer identities instead of approximately.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .pointset import PointSet, make_pointset

# mesh floor relative to diameter; counting below it is numerically empty
RESOLUTION_SCALE = 1e-12
# quotients this close to an integer (relative) get an exact refloor
BOUNDARY_BAND = 1e-9
# meshes below this multiple of the coordinate scale are rejected outright
DEGENERATE_SCALE = 1e-300


def resolution_floor(ps: PointSet) -> float:
    """Smallest mesh at which counts on ps remain meaningful.

    Below a quarter of the smallest gap every point sits in its own cell,
    and below RESOLUTION_SCALE times the diameter quotients lose integer
    resolution, so both are floored away.
    """
    return max(ps.min_gap / 4.0, RESOLUTION_SCALE * ps.diameter)


def _check_mesh(ps: PointSet, delta: float) -> None:
    if not (delta > 0.0) or not math.isfinite(delta):
        raise ValueError("mesh must be positive and finite")
    if ps.size == 0:
        return
    scale = max(1.0, float(np.abs(ps.points).max()))
    if delta < DEGENERATE_SCALE * scale:
        raise ValueError("mesh is degenerate for this coordinate scale")


def _cells_1d(col: np.ndarray, delta: float) -> np.ndarray:
    """Exact floor(col / delta) as float64 integers."""
    q = col / delta
    cells = np.floor(q)
    near = np.abs(q - np.rint(q)) < BOUNDARY_BAND * np.maximum(1.0, np.abs(q))
    if near.any():
        fd = Fraction(delta)
        for i in np.nonzero(near)[0]:
            cells[i] = float(math.floor(Fraction(float(col[i])) / fd))
    return cells


def _cell_matrix(pts: np.ndarray, delta: float) -> np.ndarray:
    return np.column_stack([_cells_1d(pts[:, j], delta)
                            for j in range(pts.shape[1])])


def grid_count(ps: PointSet, delta: float) -> int:
    """Number of occupied origin-anchored grid cells of mesh delta."""
    _check_mesh(ps, delta)
    if ps.size == 0:
        return 0
    cells = _cell_matrix(ps.points, delta)
    return int(np.unique(cells, axis=0).shape[0])


@dataclass
class GridIndex:
    """Occupied cells of one grid, with per-cell membership counts."""

    base_mesh: float
    cells: np.ndarray
    occupancy: np.ndarray

    @property
    def count(self) -> int:
        return self.cells.shape[0]


def build_index(ps: PointSet, delta: float) -> GridIndex:
    _check_mesh(ps, delta)
    if ps.size == 0:
        return GridIndex(base_mesh=delta,
                         cells=np.empty((0, ps.dim)),
                         occupancy=np.empty(0, dtype=np.int64))
    mat = _cell_matrix(ps.points, delta)
    cells, occ = np.unique(mat, axis=0, return_counts=True)
    return GridIndex(base_mesh=delta, cells=cells, occupancy=occ)


def _ball_mask(pts: np.ndarray, center: np.ndarray, radius: float
               ) -> np.ndarray:
    """Closed-ball membership with exact rational recheck at the rim."""
    diff = pts - center
    dist2 = np.sum(diff * diff, axis=1)
    r2 = radius * radius
    mask = dist2 <= r2
    rim = np.abs(dist2 - r2) <= BOUNDARY_BAND * max(r2, 1.0)
    if rim.any():
        fr2 = Fraction(radius) ** 2
        fc = [Fraction(float(v)) for v in center]
        for i in np.nonzero(rim)[0]:
            fd2 = sum((Fraction(float(pts[i, j])) - fc[j]) ** 2
                      for j in range(pts.shape[1]))
            mask[i] = fd2 <= fr2
    return mask


def ball_points(ps: PointSet, center, radius: float) -> np.ndarray:
    """Rows of ps inside the closed ball around center."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    c = np.asarray(center, dtype=float).reshape(-1)
    if c.size != ps.dim:
        raise ValueError("center dimension mismatch")
    if ps.size == 0:
        return ps.points
    return ps.points[_ball_mask(ps.points, c, radius)]


def restrict_to_ball(ps: PointSet, center, radius: float,
                     label: str = "") -> PointSet:
    pts = ball_points(ps, center, radius)
    if pts.shape[0] == 0:
        pts = np.empty((0, ps.dim))
    return make_pointset(pts, label=label or f"{ps.label}|ball")


def local_count(ps: PointSet, x, R: float, r: float,
                allow_external_center: bool = False) -> int:
    """Occupied r-cells among the points of ps within distance R of x.

    x must be a member of ps unless allow_external_center is set; r must
    not exceed R, otherwise the two scales are in the wrong order.
    """
    if not (0.0 < r <= R):
        raise ValueError("scales must satisfy 0 < r <= R")
    _check_mesh(ps, r)
    c = np.asarray(x, dtype=float).reshape(-1)
    if c.size != ps.dim:
        raise ValueError("center dimension mismatch")
    if not allow_external_center and not ps.contains(c):
        raise ValueError("center must belong to the point set")
    sub = ball_points(ps, c, R)
    if sub.shape[0] == 0:
        return 0
    cells = _cell_matrix(sub, r)
    return int(np.unique(cells, axis=0).shape[0])


@dataclass
class CoverCurve:
    """Covering counts across a decreasing mesh schedule."""

    deltas: np.ndarray
    counts: np.ndarray
    label: str = ""
    ambient_dim: int = 1

    def __post_init__(self):
        self.deltas = np.asarray(self.deltas, dtype=float)
        self.counts = np.asarray(self.counts, dtype=np.int64)
        if self.deltas.shape != self.counts.shape:
            raise ValueError("deltas and counts must align")
        if self.deltas.size and np.any(np.diff(self.deltas) >= 0):
            raise ValueError("mesh schedule must be strictly decreasing")

    def log_pairs(self):
        """(log 1/delta, log count) with zero counts mapped to -inf."""
        lx = np.log(1.0 / self.deltas)
        with np.errstate(divide="ignore"):
            ly = np.log(self.counts.astype(float))
        return lx, ly

    def write_csv(self, path: str) -> None:
        with open(path, "w") as fh:
            fh.write("delta,count,log_inv_delta,log_count\n")
            lx, ly = self.log_pairs()
            for d, c, a, b in zip(self.deltas, self.counts, lx, ly):
                fh.write("%.17g,%d,%.17g,%.17g\n" % (d, c, a, b))


def cover_curve(ps: PointSet, delta_max: float, ratio: float,
                n_scales: int) -> CoverCurve:
    """Counts at meshes delta_max * ratio**j for j = 0..n_scales-1."""
    if not (0.0 < ratio < 1.0):
        raise ValueError("ratio must lie in (0, 1)")
    if n_scales < 1:
        raise ValueError("n_scales must be >= 1")
    deltas = delta_max * ratio ** np.arange(n_scales, dtype=float)
    counts = [grid_count(ps, float(d)) for d in deltas]
    return CoverCurve(deltas=deltas, counts=np.asarray(counts),
                      label=ps.label, ambient_dim=ps.dim)


def default_box_curve(ps: PointSet) -> CoverCurve:
    """Power-of-three mesh schedule native to grid counting.

    Rungs are exact powers 3**e from just below a quarter of the diameter
    down to the last power at or above the gap floor.  Successive meshes
    refine by an integer factor, so counts are monotone and chord slopes
    are free of phase wobble.
    """
    if ps.size == 0 or ps.diameter == 0.0:
        return CoverCurve(deltas=np.array([1.0, 1.0 / 3.0]),
                          counts=np.array([min(ps.size, 1)] * 2),
                          label=ps.label, ambient_dim=ps.dim)
    diam = ps.diameter
    floor_mesh = max(ps.min_gap, resolution_floor(ps))
    e = math.floor(math.log(diam / 4.0) / math.log(3.0))
    deltas = []
    while 3.0 ** e >= floor_mesh:
        deltas.append(3.0 ** e)
        e -= 1
    if len(deltas) < 2:
        deltas = [diam / 2.0, diam / 6.0, diam / 18.0]
    counts = [grid_count(ps, d) for d in deltas]
    return CoverCurve(deltas=np.asarray(deltas),
                      counts=np.asarray(counts), label=ps.label,
                      ambient_dim=ps.dim)
