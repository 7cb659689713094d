"""Executable consistency checks for the estimator stack.

Counting identities are asserted exactly; estimator-level inequalities
carry an explicit tolerance.  Failures are recorded in reports, never
raised, so a suite always runs to completion.  Every check is labeled a
consistency check: it tests finite-scale shadows of limit statements,
not the statements themselves.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .covering import grid_count, local_count
from .pointset import PointSet, make_pointset
from .setgen import (affine_image, delta_ek, delta_example_e, gen_ek,
                     gen_example_e, set_product, set_union)
from .spectra import (DEFAULT_TOLERANCE, SpectrumCurve, box_dim_estimate,
                      generalized_upper_box, quasi_assouad_estimate,
                      spectrum_sweep)

# relative error allowed on the algebraic block-spacing identity
IDENTITY_RTOL = 1e-12
# relative error allowed on theta_effective = log R / log r
THETA_RTOL = 1e-10
# slack for power inequalities that are equalities in exact arithmetic
POWER_SLACK = 1e-9


@dataclass
class WitnessRecord:
    """One local-count witness at the scales named in a proof."""

    example_id: str
    n: int
    k: int | None
    x: float
    R: float
    r: float
    theta_effective: float
    count: int
    bound: float
    passed: bool


@dataclass
class CheckReport:
    """Outcome of one consistency check."""

    check_id: str
    inputs: str
    expected: str
    observed: list
    tolerance: float
    passed: bool
    witness: object = None

    def to_json_dict(self) -> dict:
        return {"check_id": self.check_id, "passed": self.passed,
                "tolerance": self.tolerance, "observed": self.observed,
                "expected": self.expected, "witness": self.witness}


def write_check_reports(reports, path: str) -> None:
    """JSON lines export, one object per check, ordered by check_id."""
    with open(path, "w") as fh:
        for rep in sorted(reports, key=lambda r: r.check_id):
            fh.write(json.dumps(rep.to_json_dict()) + "\n")


def witness_gubr(n: int, n_max: int, ps: PointSet | None = None
                 ) -> WitnessRecord:
    """Witness at (x=n, R=n*delta_n, r=delta_n) on the sparse-block set.

    Requires count >= n/3 and r <= R**k for every 2 <= k <= n; the power
    chain is an equality at k=n in exact arithmetic, so it is checked
    with a tiny relative slack.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if n > n_max:
        raise ValueError("n exceeds the truncation n_max")
    if ps is None:
        ps = gen_example_e(n_max)
    d = delta_example_e(n)
    x, R, r = float(n), n * d, d
    count = local_count(ps, x, R, r)
    bound = n / 3.0
    theta = math.log(R) / math.log(r)
    powers_ok = all(r <= R ** k * (1.0 + POWER_SLACK)
                    for k in range(2, n + 1))
    theta_ok = abs(theta - 1.0 / n) <= THETA_RTOL / n
    passed = (count >= bound) and powers_ok and theta_ok and r <= R
    return WitnessRecord(example_id="gubr", n=n, k=None, x=x, R=R, r=r,
                         theta_effective=theta, count=count, bound=bound,
                         passed=passed)


def egb_identity_error(k: int, n: int) -> float:
    """Relative error of (n*delta_n)**k = delta_n for the row family."""
    d = delta_ek(k, n)
    return abs((n * d) ** k - d) / d


def witness_egb(k: int, n: int, n_max: int, ps: PointSet | None = None
                ) -> WitnessRecord:
    """Witness at (x=0, R=n*delta_n, r=delta_n) on the row family."""
    if n < 2 or n > n_max:
        raise ValueError("need 2 <= n <= n_max")
    if ps is None:
        ps = gen_ek(k, n_max)
    d = delta_ek(k, n)
    x, R, r = 0.0, n * d, d
    count = local_count(ps, x, R, r)
    bound = n / 3.0
    theta = math.log(R) / math.log(r)
    identity_ok = egb_identity_error(k, n) <= IDENTITY_RTOL
    theta_ok = abs(theta - 1.0 / k) <= THETA_RTOL / k
    passed = (count >= bound) and identity_ok and theta_ok and r <= R
    return WitnessRecord(example_id="egb", n=n, k=k, x=x, R=R, r=r,
                         theta_effective=theta, count=count, bound=bound,
                         passed=passed)


def run_gubr_suite(n_max: int, n_values=None) -> list:
    """Witness records for every requested n on one shared truncation."""
    ps = gen_example_e(n_max)
    if n_values is None:
        n_values = range(2, n_max + 1)
    return [witness_gubr(n, n_max, ps=ps) for n in n_values]


def run_egb_suite(k_values, n_max: int, n_values=None) -> list:
    out = []
    for k in k_values:
        ps = gen_ek(k, n_max)
        ns = n_values if n_values is not None else \
            sorted({n for n in (2, 10, 100, n_max) if n <= n_max})
        out.extend(witness_egb(k, n, n_max, ps=ps) for n in ns)
    return out


def check_count_laws(e: PointSet, f: PointSet, deltas,
                     check_id: str = "count_laws",
                     nested: bool = False) -> CheckReport:
    """Exact covering-count laws on one pair over a mesh schedule.

    Per mesh: the union sandwich, the product bound, integer-refinement
    monotonicity, scale equivariance under a in {2, 10, 0.5}, and subset
    monotonicity when the pair is known nested (E inside F).  Passed iff
    zero violations.
    """
    deltas = [float(d) for d in deltas]
    u = set_union(e, f)
    prod = None
    if e.size * f.size <= 20000:
        prod = set_product(e, f)
    violations = []
    for delta in deltas:
        ce = grid_count(e, delta)
        cf = grid_count(f, delta)
        cu = grid_count(u, delta)
        if not (max(ce, cf) <= cu <= ce + cf):
            violations.append(("union_sandwich", delta, ce, cf, cu))
        if nested and ce > cf:
            violations.append(("subset_monotonicity", delta, ce, cf))
        for k in (2, 3):
            if grid_count(e, delta / k) < ce:
                violations.append(("refinement", delta, k))
        if prod is not None:
            cp = grid_count(prod, delta)
            if cp > ce * cf:
                violations.append(("product_bound", delta, cp, ce * cf))
        for a in (2.0, 10.0, 0.5):
            ca = grid_count(affine_image(e, a), a * delta)
            if ca != ce:
                violations.append(("scale_equivariance", delta, a, ca, ce))
    return CheckReport(
        check_id=check_id,
        inputs=f"|E|={e.size}, |F|={f.size}, {len(deltas)} meshes",
        expected="zero violations of the exact counting laws",
        observed=[len(violations)] + violations[:5],
        tolerance=0.0, passed=not violations)


def check_count_laws_random(seed: int = 7, trials: int = 100) -> list:
    """Seeded random pairs (nested and disjoint mixes) through the laws."""
    rng = np.random.default_rng(seed)
    reports = []
    for t in range(trials):
        nf = int(rng.integers(20, 200))
        f_pts = rng.random(nf)
        ne = int(rng.integers(2, nf))
        nested = t % 2 == 0
        if nested:
            e_pts = rng.choice(f_pts, size=ne, replace=False)
        else:
            e_pts = rng.random(ne) + rng.uniform(-0.5, 0.5)
        e = make_pointset(e_pts, label=f"rand-e-{t}")
        f = make_pointset(f_pts, label=f"rand-f-{t}")
        deltas = np.exp(rng.uniform(np.log(1e-4), np.log(0.4), size=6))
        reports.append(check_count_laws(
            e, f, deltas, check_id=f"count_laws_{t:03d}", nested=nested))
    return reports


def check_chain(ps: PointSet, tau: float = DEFAULT_TOLERANCE,
                curve: SpectrumCurve | None = None, box=None,
                threads: int | None = None) -> CheckReport:
    """Estimator-level inequality chain on one set, tolerance tau.

    Components: box <= value(theta) + tau at every feasible theta;
    envelope nondecreasing (exact); bracket lower <= upper + tau; the
    interpolation bound ((1-t2)/(1-t1))*v(t2) <= v(t1) + tau for all
    feasible t1 < t2; all clamped values in [0, d].
    """
    if curve is None:
        curve = spectrum_sweep(ps, threads=threads)
    if box is None:
        box = box_dim_estimate(ps)
    idx = curve.feasible_indices()
    th = curve.thetas[idx]
    vals = np.array([curve.estimates[i].value for i in idx])
    d = float(ps.dim)

    worst_box = float(np.max(box.value - vals)) if vals.size else 0.0
    env = curve.envelope
    env_def = env[~np.isnan(env)]
    env_mono = bool(np.all(np.diff(env_def) >= 0)) if env_def.size else True
    if vals.size:
        bracket = generalized_upper_box(curve, tolerance=tau)
        bracket_gap = bracket.lower - bracket.upper
    else:
        bracket_gap = 0.0
    worst_interp = 0.0
    if vals.size >= 2:
        ratio = (1.0 - th[None, :]) / (1.0 - th[:, None])
        gaps = ratio * vals[None, :] - vals[:, None]
        upper_tri = np.triu(gaps, k=1)
        worst_interp = float(np.max(upper_tri))
    clamp_ok = bool(np.all((vals >= 0.0) & (vals <= d))) if vals.size \
        else True

    passed = (worst_box <= tau and env_mono and bracket_gap <= tau
              and worst_interp <= tau and clamp_ok)
    return CheckReport(
        check_id=f"chain_{ps.label or 'set'}",
        inputs=f"|P|={ps.size}, dim={ps.dim}, "
               f"{len(idx)} feasible bins",
        expected="box<=v+tau; envelope monotone; bracket consistent; "
                 "interpolation bound; clamped range",
        observed=[worst_box, env_mono, bracket_gap, worst_interp,
                  clamp_ok],
        tolerance=tau, passed=bool(passed))


def check_zero_equivalences(ps: PointSet, eps: float = 0.1,
                            curve: SpectrumCurve | None = None,
                            threads: int | None = None) -> CheckReport:
    """Zero-dimension equivalences at threshold eps.

    The bracket point and the quasi-Assouad value must fall on the same
    side of (eps, eps') with eps' = eps/(1 - theta_max_feasible); the
    envelope at each theta is at most eps exactly when every feasible
    value at or below theta is, which is construction-exact.
    """
    if curve is None:
        curve = spectrum_sweep(ps, threads=threads)
    idx = curve.feasible_indices()
    if idx.size == 0:
        return CheckReport(
            check_id=f"zero_equiv_{ps.label or 'set'}",
            inputs=f"|P|={ps.size}",
            expected="vacuous: no feasible bin",
            observed=[], tolerance=eps, passed=True)
    theta_max = float(curve.thetas[idx[-1]])
    eps_prime = eps / (1.0 - theta_max)
    point = generalized_upper_box(curve).point
    quasi = quasi_assouad_estimate(curve).value
    sides_match = (point <= eps) == (quasi <= eps_prime)

    env = curve.envelope
    vals = curve.values
    env_violations = 0
    for i in idx:
        lhs = env[i] <= eps
        rhs = all(vals[j] <= eps for j in idx if j <= i)
        if lhs != rhs:
            env_violations += 1

    return CheckReport(
        check_id=f"zero_equiv_{ps.label or 'set'}",
        inputs=f"|P|={ps.size}, theta_max={theta_max:g}",
        expected="bracket point and quasi value on the same side of "
                 "(eps, eps'); envelope/value zero sets agree",
        observed=[point, quasi, eps_prime, env_violations],
        tolerance=eps,
        passed=bool(sides_match and env_violations == 0))
