"""Scale-ratio dimension estimators driven by two-scale local counts.

The central object is a sweep over a fixed theta grid.  A pair of scales
(R, r) with r close to R**(1/theta) is admitted for the grid value theta,
and the spectrum value at theta is the largest local chord

    log(count / 2) / log(R / r),    count = local_count(P, x, R, r)

over admitted pairs and centers x.  The division by 2 inside the log makes
the chord invariant to a constant prefactor in the counting law without
biasing the slope.  Derived quantities (quasi-Assouad, Assouad, the
generalized upper box bracket) are maxima and envelopes of these values.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .covering import (CoverCurve, default_box_curve, grid_count,
                       local_count, resolution_floor, restrict_to_ball)
from .pointset import PointSet, make_pointset

# admission: a pair needs log(R/r) >= log(RATIO_FLOOR)
RATIO_FLOOR = 8.0
# admission: the winning ball must hold at least this many occupied cells
COUNT_FLOOR = 32
# admission: occupied cells must not exceed this fraction of ball points
SATURATION_FRACTION = 0.5
# coarse-scale ladder step between successive R rungs
LADDER_STEP = math.sqrt(2.0)
# R never exceeds this fraction of the diameter
CAP_FRACTION = 0.25
# R stays strictly below 1 regardless of the diameter
R_UPPER_LIMIT = 1.0 - 1e-12
# extra in-bin rungs placed at these multiples of the minimal window
WINDOW_STRETCH = (1.25, 1.6, 2.2, 3.0, 4.2)
# all points serve as centers up to this size, then one per coarse cell
CENTER_LIMIT = 20000
CENTER_MESH_CELLS = 256
# default consistency tolerance for brackets and chain checks
DEFAULT_TOLERANCE = 0.05

_LN8 = math.log(8.0)


def theta_grid() -> np.ndarray:
    """Sweep grid: multiples of 0.02 joined with reciprocals 1/n."""
    vals = {k / 50.0 for k in range(1, 50)}
    vals |= {1.0 / n for n in range(2, 101)}
    return np.array(sorted(vals))


def theta_tolerance(theta: float) -> float:
    """Admission tolerance on the effective theta of a scale pair."""
    return max(0.005, 0.02 * theta)


class InfeasibleWindowError(ValueError):
    """No admissible scale pair exists for the requested window."""

    def __init__(self, message: str, theta_min_feasible=None):
        super().__init__(message)
        self.theta_min_feasible = theta_min_feasible


@dataclass
class ScalePairQuery:
    """A two-scale local query: ball radius R, mesh r, at center x."""

    x: tuple
    R: float
    r: float
    theta_effective: float

    def __post_init__(self):
        if not (0.0 < self.R < 1.0):
            raise ValueError("R must lie in (0, 1)")
        if not (0.0 < self.r <= self.R):
            raise ValueError("r must lie in (0, R]")
        if not (0.0 < self.theta_effective < 1.0):
            raise ValueError("theta_effective must lie in (0, 1)")


@dataclass
class DimEstimate:
    """A dimension estimate with its reproducible witness.

    value is raw clamped to [0, ambient dim]; raw is preserved.  For
    spectrum estimates the witness is a ScalePairQuery and
    raw == log(local_count(P, x, R, r) / 2) / log(R / r) exactly.
    """

    value: float
    raw: float
    method: str
    window: str
    witness: object = None
    diagnostics: dict = field(default_factory=dict)


@dataclass
class GBBracket:
    """Two-sided bracket for the small-theta limit of the spectrum."""

    lower: float
    upper: float
    point: float
    midpoint: float
    consistent: bool
    theta_min: float

    def to_json_dict(self) -> dict:
        return {"lower": self.lower, "upper": self.upper,
                "point": self.point, "consistent": self.consistent,
                "theta_min": self.theta_min}


@dataclass
class SpectrumCurve:
    """Per-theta estimates over the sweep grid; None marks infeasible bins."""

    thetas: np.ndarray
    estimates: list
    label: str = ""

    @property
    def values(self) -> np.ndarray:
        return np.array([e.value if e is not None else np.nan
                         for e in self.estimates])

    @property
    def raw_values(self) -> np.ndarray:
        return np.array([e.raw if e is not None else np.nan
                         for e in self.estimates])

    @property
    def envelope(self) -> np.ndarray:
        """Running maximum of clamped values; nondecreasing where defined."""
        out = np.full(len(self.estimates), np.nan)
        best = np.nan
        for i, e in enumerate(self.estimates):
            if e is not None:
                best = e.value if np.isnan(best) else max(best, e.value)
            out[i] = best
        return out

    def feasible_indices(self) -> np.ndarray:
        return np.array([i for i, e in enumerate(self.estimates)
                         if e is not None], dtype=int)

    @property
    def theta_min(self) -> float:
        idx = self.feasible_indices()
        if idx.size == 0:
            raise InfeasibleWindowError(
                "no feasible theta bin on this input")
        return float(self.thetas[idx[0]])

    def write_csv(self, path: str) -> None:
        env = self.envelope
        with open(path, "w") as fh:
            fh.write("theta,assouad_estimate_raw,assouad_estimate_clamped,"
                     "upper_envelope,witness_R,witness_r,witness_count\n")
            for th, e, env_v in zip(self.thetas, self.estimates, env):
                if e is None:
                    fh.write("%.17g,nan,nan,%.17g,nan,nan,0\n" % (th, env_v))
                    continue
                w = e.witness
                wr = w.R if w is not None else float("nan")
                ws = w.r if w is not None else float("nan")
                wc = e.diagnostics.get("count", 0)
                fh.write("%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d\n"
                         % (th, e.raw, e.value, env_v, wr, ws, wc))


def prenormalize(ps: PointSet) -> PointSet:
    """Translate to the origin and rescale to diameter 1/2.

    Dimension estimates are invariant under this map up to finite-scale
    effects; it brings every radius of interest below 1.
    """
    if ps.size == 0 or ps.diameter == 0.0:
        return make_pointset(ps.points.copy(),
                             label=f"{ps.label}|prenorm")
    lo = ps.points.min(axis=0)
    pts = (ps.points - lo) * (0.5 / ps.diameter)
    return make_pointset(pts, label=f"{ps.label}|prenorm")


def _clamp(raw: float, d: int) -> float:
    return min(max(raw, 0.0), float(d))


def _zero_estimate(method: str, window: str, note: str) -> DimEstimate:
    return DimEstimate(value=0.0, raw=0.0, method=method, window=window,
                       witness=None, diagnostics={"degenerate": note})


@dataclass
class _SweepContext:
    ps: PointSet
    coords: np.ndarray
    pts: np.ndarray
    centers_1d: np.ndarray
    centers_nd: np.ndarray
    res_floor: float
    ln_floor: float
    cap: float
    ladder: list


def _select_centers_1d(coords: np.ndarray, diam: float) -> np.ndarray:
    if coords.size <= CENTER_LIMIT:
        return coords
    mesh = diam / CENTER_MESH_CELLS
    cells = np.floor(coords / mesh)
    _, first = np.unique(cells, return_index=True)
    return coords[np.sort(first)]


def _select_centers_nd(pts: np.ndarray, diam: float) -> np.ndarray:
    order = np.lexsort(pts.T[::-1])
    spts = pts[order]
    if spts.shape[0] <= CENTER_LIMIT:
        return spts
    mesh = diam / CENTER_MESH_CELLS
    cells = np.floor(spts / mesh)
    _, first = np.unique(cells, axis=0, return_index=True)
    return spts[np.sort(first)]


def _make_context(ps: PointSet) -> _SweepContext:
    rf = resolution_floor(ps)
    diam = ps.diameter
    cap = min(R_UPPER_LIMIT, CAP_FRACTION * diam)
    ladder = []
    R = cap
    while R >= RATIO_FLOOR * rf:
        ladder.append(R)
        R /= LADDER_STEP
    if ps.dim == 1:
        coords = ps.coords_sorted()
        centers = _select_centers_1d(coords, diam)
        return _SweepContext(ps, coords, ps.points, centers,
                             np.empty((0, 1)), rf, math.log(rf), cap,
                             ladder)
    centers = _select_centers_nd(ps.points, diam)
    return _SweepContext(ps, np.empty(0), ps.points, np.empty(0),
                         centers, rf, math.log(rf), cap, ladder)


def _best_center_1d(coords, xs, r, R, count_floor):
    """Max of log(count/2) over centers; returns (val, count, x) or None."""
    cells = np.floor(coords / r)
    new = np.empty(coords.size, dtype=bool)
    new[0] = True
    new[1:] = cells[1:] != cells[:-1]
    cum = np.cumsum(new)
    lo = np.searchsorted(coords, xs - R, side="left")
    hi = np.searchsorted(coords, xs + R, side="right")
    ball = hi - lo
    cnt = cum[hi - 1] - cum[lo] + 1
    ok = (cnt >= count_floor) & (2 * cnt <= ball)
    if not ok.any():
        return None
    vals = np.log(cnt[ok] / 2.0)
    j = int(np.argmax(vals))
    idx = np.nonzero(ok)[0][j]
    return float(vals[j]), int(cnt[idx]), float(xs[idx])


def _best_center_nd(pts, xs, r, R, count_floor):
    cellmat = np.floor(pts / r)
    r2 = R * R
    best = None
    for row in xs:
        diff = pts - row
        mask = np.einsum("ij,ij->i", diff, diff) <= r2
        ball = int(mask.sum())
        if ball < count_floor:
            continue
        cnt = int(np.unique(cellmat[mask], axis=0).shape[0])
        if cnt < count_floor or 2 * cnt > ball:
            continue
        val = math.log(cnt / 2.0)
        if best is None or val > best[0]:
            best = (val, cnt, tuple(float(v) for v in row))
    return best


def _bin_rungs(ctx: _SweepContext, theta: float) -> list:
    rungs = set(ctx.ladder)
    rungs.add(math.exp(theta * ctx.ln_floor))
    for s in WINDOW_STRETCH:
        rungs.add(math.exp(-theta * s * _LN8 / (1.0 - theta)))
    return sorted((R for R in rungs if 0.0 < R <= ctx.cap), reverse=True)


def _bin_evaluate(ctx: _SweepContext, theta: float, count_floor: int):
    """Best admitted chord in one theta bin, or None if infeasible."""
    best = None
    tol = theta_tolerance(theta)
    for R in _bin_rungs(ctx, theta):
        ln_r_query = math.log(R) / theta
        r = math.exp(ln_r_query)
        te = theta
        if r < ctx.res_floor:
            r = ctx.res_floor
            te = math.log(R) / ctx.ln_floor
            if abs(te - theta) > tol:
                continue
        if R < RATIO_FLOOR * r:
            continue
        ln_ratio = math.log(R / r)
        if ctx.ps.dim == 1:
            got = _best_center_1d(ctx.coords, ctx.centers_1d, r, R,
                                  count_floor)
        else:
            got = _best_center_nd(ctx.pts, ctx.centers_nd, r, R,
                                  count_floor)
        if got is None:
            continue
        chord = got[0] / ln_ratio
        if best is None or chord > best[0]:
            best = (chord, got[2], R, r, te)
    if best is None:
        return None
    _, x, R, r, te = best
    count = local_count(ctx.ps, x, R, r)
    raw = math.log(count / 2.0) / math.log(R / r)
    wx = x if isinstance(x, tuple) else (x,)
    witness = ScalePairQuery(x=wx, R=R, r=r, theta_effective=te)
    return DimEstimate(value=_clamp(raw, ctx.ps.dim), raw=raw,
                       method="assouad_spectrum",
                       window="theta=%.17g" % theta, witness=witness,
                       diagnostics={"count": count})


def _degenerate_curve(ps: PointSet) -> SpectrumCurve:
    grid = theta_grid()
    ests = [_zero_estimate("assouad_spectrum", "theta=%.17g" % th,
                           "fewer than 2 distinct points")
            for th in grid]
    return SpectrumCurve(thetas=grid, estimates=ests, label=ps.label)


def spectrum_sweep(ps: PointSet, threads: int | None = None,
                   count_floor: int = COUNT_FLOOR) -> SpectrumCurve:
    """Evaluate the spectrum on the full theta grid.

    Bins with no admitted pair are reported as None, never as zero.
    Degenerate inputs (fewer than two distinct points) give zero at every
    theta since all local counts are 1.
    """
    if ps.size <= 1 or ps.diameter == 0.0:
        return _degenerate_curve(ps)
    ctx = _make_context(ps)
    grid = theta_grid()

    def work(th):
        return _bin_evaluate(ctx, float(th), count_floor)

    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            ests = list(ex.map(work, grid))
    else:
        ests = [work(th) for th in grid]
    return SpectrumCurve(thetas=grid, estimates=ests, label=ps.label)


def assouad_spectrum_point(ps: PointSet, theta: float,
                           count_floor: int = COUNT_FLOOR) -> DimEstimate:
    """Spectrum value at the grid bin nearest to theta."""
    grid = theta_grid()
    j = int(np.argmin(np.abs(grid - theta)))
    if abs(grid[j] - theta) > theta_tolerance(theta):
        raise ValueError("theta is not within tolerance of the sweep grid")
    if ps.size <= 1 or ps.diameter == 0.0:
        return _zero_estimate("assouad_spectrum",
                              "theta=%.17g" % grid[j],
                              "fewer than 2 distinct points")
    est = _bin_evaluate(_make_context(ps), float(grid[j]), count_floor)
    if est is None:
        raise InfeasibleWindowError(
            "no admissible scale pair at theta=%g" % grid[j])
    return est


def upper_spectrum(curve: SpectrumCurve, theta: float) -> float:
    """Envelope value at the largest grid point not exceeding theta."""
    th = curve.thetas
    if theta < th[0] - 1e-12 or theta > th[-1] + 1e-12:
        raise ValueError("theta outside the sweep grid hull")
    i = int(np.searchsorted(th, theta + 1e-12)) - 1
    i = max(i, 0)
    env = curve.envelope
    if np.isnan(env[i]):
        idx = curve.feasible_indices()
        tmf = float(curve.thetas[idx[0]]) if idx.size else None
        raise InfeasibleWindowError(
            "no feasible bin at or below theta=%g" % theta,
            theta_min_feasible=tmf)
    return float(env[i])


def quasi_assouad_estimate(source, threads: int | None = None,
                           count_floor: int = COUNT_FLOOR) -> DimEstimate:
    """Envelope value at the top of the theta grid."""
    curve = source if isinstance(source, SpectrumCurve) else \
        spectrum_sweep(source, threads=threads, count_floor=count_floor)
    idx = curve.feasible_indices()
    if idx.size == 0:
        raise InfeasibleWindowError("no feasible theta bin on this input")
    env = curve.envelope
    value = float(env[-1])
    j = next(i for i in idx if curve.estimates[i].value == value)
    src = curve.estimates[j]
    return DimEstimate(value=value, raw=src.raw, method="quasi_assouad",
                       window="theta_max=%.17g" % curve.thetas[-1],
                       witness=src.witness,
                       diagnostics=dict(src.diagnostics,
                                        theta_arg=float(curve.thetas[j])))


def assouad_dim_estimate(ps: PointSet, curve: SpectrumCurve | None = None,
                         threads: int | None = None,
                         count_floor: int = COUNT_FLOOR) -> DimEstimate:
    """Largest admitted chord over all ladder scale pairs and all bins.

    The candidate pairs are a superset of every bin's admitted pairs, so
    the result dominates the whole spectrum curve exactly.
    """
    if ps.size <= 1 or ps.diameter == 0.0:
        return _zero_estimate("assouad", "ladder",
                              "fewer than 2 distinct points")
    if curve is None:
        curve = spectrum_sweep(ps, threads=threads, count_floor=count_floor)
    ctx = _make_context(ps)
    best = None
    rungs = list(ctx.ladder)
    for i, R in enumerate(rungs):
        for r in rungs[i:] + [ctx.res_floor]:
            if r > R / RATIO_FLOOR:
                continue
            if ctx.ps.dim == 1:
                got = _best_center_1d(ctx.coords, ctx.centers_1d, r, R,
                                      count_floor)
            else:
                got = _best_center_nd(ctx.pts, ctx.centers_nd, r, R,
                                      count_floor)
            if got is None:
                continue
            chord = got[0] / math.log(R / r)
            if best is None or chord > best[0]:
                best = (chord, got[2], R, r)
    ladder_est = None
    if best is not None:
        _, x, R, r = best
        count = local_count(ps, x, R, r)
        raw = math.log(count / 2.0) / math.log(R / r)
        wx = x if isinstance(x, tuple) else (x,)
        ladder_est = DimEstimate(
            value=_clamp(raw, ps.dim), raw=raw, method="assouad",
            window="ladder", witness=ScalePairQuery(
                x=wx, R=R, r=r, theta_effective=math.log(R) / math.log(r)),
            diagnostics={"count": count})
    bin_best = None
    for i in curve.feasible_indices():
        e = curve.estimates[i]
        if bin_best is None or e.raw > bin_best.raw:
            bin_best = e
    pick = ladder_est
    if bin_best is not None and (pick is None or bin_best.raw >= pick.raw):
        pick = DimEstimate(value=bin_best.value, raw=bin_best.raw,
                           method="assouad", window="spectrum_max",
                           witness=bin_best.witness,
                           diagnostics=dict(bin_best.diagnostics))
    if pick is None:
        raise InfeasibleWindowError(
            "no admissible scale pair for the Assouad sweep")
    return pick


def generalized_upper_box(curve: SpectrumCurve,
                          tolerance: float = DEFAULT_TOLERANCE) -> GBBracket:
    """Bracket the small-theta limit of the spectrum.

    lower = max over theta of (1 - theta) * value(theta); upper = min of
    value(theta); point is the value at the smallest feasible theta.
    """
    idx = curve.feasible_indices()
    if idx.size == 0:
        raise InfeasibleWindowError(
            "empty spectrum: no feasible theta bin")
    th = curve.thetas[idx]
    vals = np.array([curve.estimates[i].value for i in idx])
    lower = float(np.max((1.0 - th) * vals))
    upper = float(np.min(vals))
    point = float(vals[0])
    return GBBracket(lower=lower, upper=upper, point=point,
                     midpoint=0.5 * (lower + upper),
                     consistent=bool(lower <= upper + tolerance),
                     theta_min=float(th[0]))


def box_dim_estimate(source, method: str = "max_chord",
                     tail_fraction: float = 0.5) -> DimEstimate:
    """Box-counting slope over the finest part of a cover curve.

    source is a PointSet (counted on the default power-of-three schedule)
    or a prebuilt CoverCurve.  max_chord takes the steepest chord between
    consecutive scales in the tail window; least_squares fits one slope
    to the window and suits noisy curves.
    """
    if method not in ("max_chord", "least_squares"):
        raise ValueError("method must be max_chord or least_squares")
    if not (0.0 < tail_fraction <= 1.0):
        raise ValueError("tail_fraction must lie in (0, 1]")
    if isinstance(source, CoverCurve):
        curve = source
    else:
        curve = default_box_curve(source)
    usable = curve.counts >= 1
    if not usable.any():
        return _zero_estimate("box_" + method, "empty curve",
                              "all counts are zero")
    deltas = curve.deltas[usable]
    counts = curve.counts[usable]
    if deltas.size < 2:
        raise ValueError("need at least 2 usable scales")
    lx = np.log(1.0 / deltas)
    ly = np.log(counts.astype(float))
    m = deltas.size
    k = min(int(m * (1.0 - tail_fraction)), m - 2)
    k = max(k, 0)
    wx, wy = lx[k:], ly[k:]
    window = "scales[%d:%d] of %d" % (k, m, m)
    if method == "max_chord":
        chords = np.diff(wy) / np.diff(wx)
        j = int(np.argmax(chords))
        raw = float(chords[j])
        witness = {"delta_coarse": float(deltas[k + j]),
                   "delta_fine": float(deltas[k + j + 1]),
                   "count_coarse": int(counts[k + j]),
                   "count_fine": int(counts[k + j + 1])}
        diag = {"n_scales": int(m),
                "chord_min": float(chords.min()),
                "chord_max": float(chords.max())}
    else:
        raw = float(np.polyfit(wx, wy, 1)[0])
        witness = {"log_inv_delta": [float(v) for v in wx],
                   "log_count": [float(v) for v in wy]}
        resid = wy - (np.polyval(np.polyfit(wx, wy, 1), wx))
        diag = {"n_scales": int(m),
                "residual_max": float(np.abs(resid).max())}
    return DimEstimate(value=_clamp(raw, curve.ambient_dim), raw=raw,
                       method="box_" + method, window=window,
                       witness=witness, diagnostics=diag)


@dataclass
class GBStarEntry:
    radius: float
    estimate: DimEstimate
    restricted_size: int


def gb_star_estimate(family, radii) -> list:
    """Saturation-window box estimates of ball restrictions of a family.

    family maps a radius R to an adequately truncated PointSet; the
    restriction to the closed ball of radius R about the origin is then
    counted on a power-of-three window strictly below its minimum gap,
    where every point occupies its own cell.  Finite restrictions
    therefore report 0; an empty restriction records 0 as well.
    """
    radii = [float(R) for R in radii]
    if any(R <= 0 for R in radii) or any(b <= a for a, b in
                                         zip(radii, radii[1:])):
        raise ValueError("radii must be positive and increasing")
    out = []
    for R in radii:
        ps = family(R)
        sub = restrict_to_ball(ps, np.zeros(ps.dim), R,
                               label=f"{ps.label}|B(O,{R:g})")
        if sub.size <= 1 or sub.diameter == 0.0:
            est = _zero_estimate("box_max_chord", "saturated",
                                 "restriction has fewer than 2 points")
        else:
            gap = max(sub.min_gap, resolution_floor(sub))
            e = math.floor(math.log(gap) / math.log(3.0)) - 1
            deltas = [3.0 ** (e - j) for j in range(4)]
            counts = [grid_count(sub, d) for d in deltas]
            curve = CoverCurve(deltas=np.asarray(deltas),
                               counts=np.asarray(counts),
                               label=sub.label, ambient_dim=sub.dim)
            est = box_dim_estimate(curve, method="max_chord",
                                   tail_fraction=1.0)
        est.diagnostics["restricted_size"] = sub.size
        out.append(GBStarEntry(radius=R, estimate=est,
                               restricted_size=sub.size))
    return out


def example_e_family(n_pad: int = 1):
    """Radius-indexed truncations of the sparse-block line set."""
    from .setgen import gen_example_e

    def build(R: float) -> PointSet:
        return gen_example_e(max(2, math.ceil(R) + n_pad))

    return build


def decomposition_dim_upper(pieces, threads: int | None = None,
                            count_floor: int = COUNT_FLOOR) -> DimEstimate:
    """Upper-bound certificate from a finite decomposition.

    Returns the sup over pieces of the bracket point estimate; no search
    over alternative decompositions happens.  Pieces too small to admit
    any scale pair fall back to their box estimate.
    """
    pieces = list(pieces)
    if not pieces:
        raise ValueError("pieces must be nonempty")
    values = []
    witness = None
    best = None
    for piece in pieces:
        curve = spectrum_sweep(piece, threads=threads,
                               count_floor=count_floor)
        try:
            est_val = generalized_upper_box(curve).point
            src = curve.estimates[curve.feasible_indices()[0]]
        except InfeasibleWindowError:
            box = box_dim_estimate(piece)
            est_val, src = box.value, box
        values.append(est_val)
        if best is None or est_val > best:
            best = est_val
            witness = src.witness
    return DimEstimate(value=float(best), raw=float(best),
                       method="decomposition_upper",
                       window="%d pieces" % len(pieces), witness=witness,
                       diagnostics={"piece_values": values})


@dataclass
class EstimateBundle:
    """All headline estimates of one point set, sharing one sweep."""

    label: str
    cover: CoverCurve
    box: DimEstimate
    spectrum: SpectrumCurve
    bracket: GBBracket | None
    quasi: DimEstimate | None
    assouad: DimEstimate | None


def estimate_bundle(ps: PointSet, threads: int | None = None,
                    count_floor: int = COUNT_FLOOR) -> EstimateBundle:
    cover = default_box_curve(ps)
    box = box_dim_estimate(cover)
    curve = spectrum_sweep(ps, threads=threads, count_floor=count_floor)
    try:
        bracket = generalized_upper_box(curve)
        quasi = quasi_assouad_estimate(curve)
        assouad = assouad_dim_estimate(ps, curve=curve, threads=threads,
                                       count_floor=count_floor)
    except InfeasibleWindowError:
        bracket, quasi, assouad = None, None, None
    return EstimateBundle(label=ps.label, cover=cover, box=box,
                          spectrum=curve, bracket=bracket, quasi=quasi,
                          assouad=assouad)
