"""Finite point sets in R^d with exact deduplication and file round-trip.

Points are stored in insertion order as a read-only (n, d) float64 array.
Duplicates are removed by exact bit equality, never by epsilon merging:
generators only collide at exactly representable values, and tolerance
merging would silently change covering counts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

# exact geometry helpers switch to O(n^2) scans below this size in d >= 2
BRUTE_LIMIT = 8192


def _as_matrix(points) -> np.ndarray:
    arr = np.asarray(points, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ValueError("points must be a 1-d or 2-d array")
    if arr.size and not np.all(np.isfinite(arr)):
        raise ValueError("points must be finite")
    return arr


def _dedup_keep_first(arr: np.ndarray) -> np.ndarray:
    if arr.shape[0] == 0:
        return arr
    _, first = np.unique(arr, axis=0, return_index=True)
    return arr[np.sort(first)]


@dataclass(eq=False)
class PointSet:
    """Immutable finite point set; construct through make_pointset."""

    points: np.ndarray
    label: str = ""
    _sorted: np.ndarray | None = field(default=None, repr=False, compare=False)

    @property
    def size(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]

    def coords_sorted(self) -> np.ndarray:
        """Sorted 1-d coordinate array; only defined for ambient dim 1."""
        if self.dim != 1:
            raise ValueError("coords_sorted requires ambient dimension 1")
        if self._sorted is None:
            srt = np.sort(self.points[:, 0])
            srt.setflags(write=False)
            self._sorted = srt
        return self._sorted

    @property
    def diameter(self) -> float:
        if self.size < 2:
            return 0.0
        if self.dim == 1:
            c = self.coords_sorted()
            return float(c[-1] - c[0])
        if self.size <= BRUTE_LIMIT:
            best = 0.0
            for i in range(self.size - 1):
                d2 = np.sum((self.points[i + 1:] - self.points[i]) ** 2,
                            axis=1)
                best = max(best, float(d2.max()))
            return float(np.sqrt(best))
        span = self.points.max(axis=0) - self.points.min(axis=0)
        return float(np.sqrt(np.sum(span ** 2)))

    @property
    def min_gap(self) -> float:
        """Smallest positive inter-point distance; 0 for size < 2."""
        if self.size < 2:
            return 0.0
        if self.dim == 1:
            gaps = np.diff(self.coords_sorted())
            gaps = gaps[gaps > 0]
            return float(gaps.min()) if gaps.size else 0.0
        if self.size <= BRUTE_LIMIT:
            best = np.inf
            for i in range(self.size - 1):
                d2 = np.sum((self.points[i + 1:] - self.points[i]) ** 2,
                            axis=1)
                best = min(best, float(d2.min()))
            return float(np.sqrt(best))
        best = np.inf
        for ax in range(self.dim):
            col = np.sort(self.points[:, ax])
            gaps = np.diff(col)
            gaps = gaps[gaps > 0]
            if gaps.size:
                best = min(best, float(gaps.min()))
        return best if np.isfinite(best) else 0.0

    def contains(self, x) -> bool:
        """Exact bit-equality membership test."""
        row = np.asarray(x, dtype=float).reshape(-1)
        if row.size != self.dim:
            return False
        return bool(np.any(np.all(self.points == row, axis=1)))


def make_pointset(points, label: str = "") -> PointSet:
    arr = _dedup_keep_first(_as_matrix(points))
    arr.setflags(write=False)
    return PointSet(points=arr, label=label)


def write_points(ps: PointSet, path: str) -> None:
    """Write CSV (.csv) or JSON (.json); both round-trip bit-exactly."""
    if path.endswith(".json"):
        doc = {"dim": ps.dim, "label": ps.label,
               "points": ps.points.tolist()}
        with open(path, "w") as fh:
            json.dump(doc, fh)
            fh.write("\n")
        return
    with open(path, "w") as fh:
        fh.write(f"# fracdim pointset dim={ps.dim} label={ps.label}\n")
        for row in ps.points:
            fh.write(",".join(repr(float(v)) for v in row) + "\n")


def read_points(path: str, label: str = "") -> PointSet:
    """Read a point set; format chosen by file extension (.csv/.json)."""
    if path.endswith(".json"):
        with open(path) as fh:
            doc = json.load(fh)
        pts = np.asarray(doc["points"], dtype=float)
        if pts.size == 0:
            pts = pts.reshape(0, int(doc.get("dim", 1)))
        return make_pointset(pts, label=label or doc.get("label", ""))
    rows = []
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rows.append([float(v) for v in line.split(",")])
    if not rows:
        return make_pointset(np.empty((0, 1)), label=label)
    return make_pointset(np.asarray(rows, dtype=float), label=label)
