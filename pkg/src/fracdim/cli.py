"""Command line driver for set generation, sweeps, and reports.

Usage examples:
  fracdim gen example-e --n-max 100 -o e.csv
  fracdim gen cantor --level 3 -o c.json
  fracdim gen ek --k 2 --n-max 1 -o ek.csv
  fracdim boxdim e.csv
  fracdim spectrum e.csv --theta 0.5
  fracdim gbdim e.csv
  fracdim gbstar --family example-e --radii 5,10,20
  fracdim verify gubr --n 2..2000
  fracdim verify egb --k 2,3,5
  fracdim verify count-laws --seed 7 --trials 100
  fracdim report --set cantor-12 -o out/cantor

Exit status is 0 only when every requested check passed; generation and
estimation commands exit 0 on success regardless of the values found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .covering import default_box_curve
from .pointset import PointSet, make_pointset, read_points, write_points
from .report import DEFAULT_EPS, RunConfig, build_report, write_report
from .setgen import (gen_cantor_midpoints, gen_egb_union, gen_ek,
                     gen_example_e, gen_poly_sequence, gen_uniform_grid)
from .spectra import (DEFAULT_TOLERANCE, InfeasibleWindowError,
                      assouad_spectrum_point, box_dim_estimate,
                      example_e_family, gb_star_estimate,
                      generalized_upper_box, prenormalize,
                      quasi_assouad_estimate, spectrum_sweep)
from .verify import (check_chain, check_count_laws_random,
                     check_zero_equivalences, egb_identity_error,
                     run_egb_suite, run_gubr_suite, write_check_reports,
                     CheckReport)


def _gen_from_args(name: str, args) -> PointSet:
    if name == "example-e":
        return gen_example_e(args.n_max)
    if name == "ek":
        if args.k is None:
            raise SystemExit("gen ek requires --k")
        return gen_ek(args.k, args.n_max)
    if name == "egb-union":
        return gen_egb_union(args.i_max, args.n_max)
    if name == "cantor":
        return gen_cantor_midpoints(args.level)
    if name == "poly":
        return gen_poly_sequence(args.p, args.n_max)
    if name == "uniform-grid":
        return gen_uniform_grid(args.count)
    raise SystemExit(f"unknown generator: {name}")


def calibration_sets() -> dict:
    """Named builders for the calibration suite, cheap until called."""
    return {
        "cantor-12": lambda: gen_cantor_midpoints(12, label="cantor-12"),
        "poly-1-100000": lambda: gen_poly_sequence(
            1, 100000, label="poly-1-100000"),
        "poly-2-100000": lambda: gen_poly_sequence(
            2, 100000, label="poly-2-100000"),
        "ek-2-1000": lambda: gen_ek(2, 1000, label="ek-2-1000"),
        "ek-3-1000": lambda: gen_ek(3, 1000, label="ek-3-1000"),
        "e-2000": lambda: gen_example_e(2000, label="e-2000"),
        "grid-1024": lambda: gen_uniform_grid(1024, label="grid-1024"),
        "singleton": lambda: make_pointset([0.3], label="singleton"),
        "empty": lambda: make_pointset([], label="empty"),
    }


def calibration_suite() -> list:
    return [build() for build in calibration_sets().values()]


def _parse_range(text: str) -> list:
    if ".." in text:
        a, b = text.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return [int(v) for v in text.split(",")]


def _parse_floats(text: str) -> list:
    return [float(v) for v in text.split(",")]


def _resolve_threads(args) -> int | None:
    if getattr(args, "threads", None) is not None:
        return args.threads
    env = os.environ.get("FRACDIM_THREADS")
    return int(env) if env else None


def _load_input(path: str, label: str = "") -> PointSet:
    return read_points(path, label=label or os.path.basename(path))


def _maybe_prenorm(ps: PointSet, args) -> PointSet:
    if getattr(args, "prenormalize", False):
        return prenormalize(ps)
    return ps


def _print(line: str) -> None:
    sys.stdout.write(line + "\n")


def cmd_gen(args) -> int:
    ps = _gen_from_args(args.generator, args)
    out = args.out
    if out is None:
        raise SystemExit("gen requires --out")
    if not (out.endswith(".csv") or out.endswith(".json")):
        out = out + ("." + args.format)
    write_points(ps, out)
    _print(f"wrote {ps.size} points to {out}")
    return 0


def cmd_boxdim(args) -> int:
    ps = _maybe_prenorm(_load_input(args.input), args)
    if ps.size == 0:
        sys.stderr.write("warning: empty input, dimension 0 by "
                         "convention\n")
    est = box_dim_estimate(ps, method=args.method,
                           tail_fraction=args.tail_fraction)
    _print(f"box_dim {est.value:.6f} method={est.method} "
           f"label={ps.label}")
    if args.out:
        curve = default_box_curve(ps)
        curve.write_csv(args.out + "_cover.csv")
        with open(args.out + ".json", "w") as fh:
            json.dump({"label": ps.label, "value": est.value,
                       "raw": est.raw, "method": est.method,
                       "window": est.window, "witness": est.witness},
                      fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


def cmd_spectrum(args) -> int:
    ps = _maybe_prenorm(_load_input(args.input), args)
    threads = _resolve_threads(args)
    if args.theta is not None:
        try:
            est = assouad_spectrum_point(ps, args.theta)
        except (InfeasibleWindowError, ValueError) as exc:
            sys.stderr.write(f"error: {exc}\n")
            return 1
        _print(f"spectrum theta={args.theta:g} value={est.value:.6f} "
               f"raw={est.raw:.6f}")
        return 0
    curve = spectrum_sweep(ps, threads=threads)
    try:
        quasi = quasi_assouad_estimate(curve)
        _print(f"theta_min {curve.theta_min:.6f}")
        _print(f"quasi_assouad {quasi.value:.6f}")
    except InfeasibleWindowError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    if args.out:
        curve.write_csv(args.out + "_spectrum.csv")
    return 0


def cmd_gbdim(args) -> int:
    ps = _maybe_prenorm(_load_input(args.input), args)
    threads = _resolve_threads(args)
    curve = spectrum_sweep(ps, threads=threads)
    try:
        bracket = generalized_upper_box(curve, tolerance=args.tolerance)
    except InfeasibleWindowError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    doc = bracket.to_json_dict()
    _print(json.dumps(doc, sort_keys=True))
    if args.out:
        with open(args.out + ".json", "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


def cmd_gbstar(args) -> int:
    families = {"example-e": example_e_family(args.n_pad)}
    if args.family not in families:
        raise SystemExit(f"unknown family: {args.family}")
    radii = _parse_floats(args.radii)
    entries = gb_star_estimate(families[args.family], radii)
    for ent in entries:
        _print(f"R={ent.radius:g} value={ent.estimate.value:.6f} "
               f"restricted_size={ent.restricted_size}")
    if args.out:
        rows = [{"radius": ent.radius, "value": ent.estimate.value,
                 "raw": ent.estimate.raw,
                 "restricted_size": ent.restricted_size}
                for ent in entries]
        with open(args.out + ".json", "w") as fh:
            json.dump(rows, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


def _verify_gubr(args) -> list:
    ns = _parse_range(args.n) if args.n else list(range(2, 2001))
    n_max = args.n_max or max(ns)
    records = run_gubr_suite(n_max, n_values=ns)
    return [CheckReport(
        check_id=f"gubr_n{rec.n:05d}",
        inputs=f"n={rec.n}, n_max={n_max}",
        expected="count >= n/3; r <= R**k for k <= n; theta = 1/n",
        observed=[rec.count, rec.bound, rec.theta_effective],
        tolerance=0.0, passed=rec.passed) for rec in records]


def _verify_egb(args) -> list:
    ks = _parse_range(args.k) if args.k else [2, 3, 5]
    n_max = args.n_max or 1000
    out = []
    for k in ks:
        worst = max(egb_identity_error(k, n)
                    for n in range(2, 10001))
        out.append(CheckReport(
            check_id=f"egb_identity_k{k}",
            inputs=f"k={k}, n <= 10000",
            expected="(n*delta)**k = delta to 1e-12 relative",
            observed=[worst], tolerance=1e-12,
            passed=worst <= 1e-12))
    for rec in run_egb_suite(ks, n_max):
        out.append(CheckReport(
            check_id=f"egb_witness_k{rec.k}_n{rec.n:05d}",
            inputs=f"k={rec.k}, n={rec.n}, n_max={n_max}",
            expected="count >= n/3; identity; theta = 1/k",
            observed=[rec.count, rec.bound, rec.theta_effective],
            tolerance=0.0, passed=rec.passed))
    return out


def _verify_sets(args) -> list:
    builders = calibration_sets()
    if args.set:
        chosen = []
        for name in args.set:
            if name in builders:
                chosen.append(builders[name]())
            else:
                chosen.append(_load_input(name))
        return chosen
    return calibration_suite()


def cmd_verify(args) -> int:
    threads = _resolve_threads(args)
    reports = []
    suite = args.suite
    if suite in ("gubr", "all"):
        reports.extend(_verify_gubr(args))
    if suite in ("egb", "all"):
        reports.extend(_verify_egb(args))
    if suite in ("count-laws", "all"):
        reports.extend(check_count_laws_random(
            seed=args.seed if args.seed is not None else 7,
            trials=args.trials))
    if suite in ("chain", "zero", "all"):
        for ps in _verify_sets(args):
            curve = spectrum_sweep(ps, threads=threads)
            if suite in ("chain", "all"):
                reports.append(check_chain(ps, tau=args.tolerance,
                                           curve=curve))
            if suite in ("zero", "all"):
                reports.append(check_zero_equivalences(
                    ps, eps=args.eps, curve=curve))
    if not reports:
        raise SystemExit(f"unknown verify suite: {suite}")
    n_pass = sum(1 for r in reports if r.passed)
    _print(f"{suite}: {n_pass}/{len(reports)} checks passed")
    for rep in reports:
        if not rep.passed:
            _print(f"FAIL {rep.check_id}: observed={rep.observed}")
    if args.out:
        write_check_reports(reports, args.out)
    return 0 if n_pass == len(reports) else 1


def cmd_report(args) -> int:
    threads = _resolve_threads(args)
    targets = []
    if args.input:
        targets.append((None, _load_input(args.input)))
    for name in args.set or []:
        builders = calibration_sets()
        if name not in builders:
            raise SystemExit(f"unknown calibration set: {name}")
        targets.append((name, builders[name]()))
    if not targets:
        raise SystemExit("report needs an input file or --set")
    if not args.out:
        raise SystemExit("report requires --out")
    all_passed = True
    for name, ps in targets:
        ps = _maybe_prenorm(ps, args)
        source = {"kind": "calibration", "name": name} if name else \
            {"kind": "file", "path": os.path.basename(args.input)}
        config = RunConfig(
            command="report", source=source,
            parameters={"tolerance": args.tolerance, "eps": args.eps,
                        "prenormalize": bool(args.prenormalize)},
            format=args.format, seed=args.seed)
        doc = build_report(ps, config, tolerance=args.tolerance,
                           eps=args.eps, threads=threads,
                           with_timing=args.timing)
        base = args.out if len(targets) == 1 else \
            f"{args.out}_{name or 'input'}"
        paths = write_report(doc, base, with_plots=not args.no_plots)
        ok = all(rep.passed for rep in doc.checks)
        all_passed = all_passed and ok
        _print(f"report {ps.label}: {len(paths)} files at {base}* "
               f"checks_passed={ok}")
    return 0 if all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"],
                        default="json")
    common.add_argument("--out", "-o", default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--threads", type=int, default=None)
    common.add_argument("--tolerance", type=float,
                        default=DEFAULT_TOLERANCE)

    parser = argparse.ArgumentParser(
        prog="fracdim",
        description="Scale-ratio fractal dimension estimators for "
                    "finite point sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common],
                       help="generate a calibration point set")
    p.add_argument("generator",
                   choices=["example-e", "ek", "egb-union", "cantor",
                            "poly", "uniform-grid"])
    p.add_argument("--n-max", type=int, default=100)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--i-max", type=int, default=3)
    p.add_argument("--level", type=int, default=3)
    p.add_argument("--p", type=float, default=1.0)
    p.add_argument("--count", type=int, default=100)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("boxdim", parents=[common],
                       help="box-counting dimension of a point file")
    p.add_argument("input")
    p.add_argument("--method", choices=["max_chord", "least_squares"],
                   default="max_chord")
    p.add_argument("--tail-fraction", type=float, default=0.5)
    p.add_argument("--prenormalize", action="store_true")
    p.set_defaults(func=cmd_boxdim)

    p = sub.add_parser("spectrum", parents=[common],
                       help="spectrum sweep or single-theta value")
    p.add_argument("input")
    p.add_argument("--theta", type=float, default=None)
    p.add_argument("--prenormalize", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("gbdim", parents=[common],
                       help="generalized upper box bracket")
    p.add_argument("input")
    p.add_argument("--prenormalize", action="store_true")
    p.set_defaults(func=cmd_gbdim)

    p = sub.add_parser("gbstar", parents=[common],
                       help="ball-restricted saturation estimates")
    p.add_argument("--family", default="example-e")
    p.add_argument("--radii", required=True)
    p.add_argument("--n-pad", type=int, default=1)
    p.set_defaults(func=cmd_gbstar)

    p = sub.add_parser("verify", parents=[common],
                       help="run consistency check suites")
    p.add_argument("suite",
                   choices=["gubr", "egb", "count-laws", "chain",
                            "zero", "all"])
    p.add_argument("--n", default=None,
                   help="range like 2..2000 for gubr")
    p.add_argument("--k", default=None, help="list like 2,3,5 for egb")
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--set", action="append", default=None,
                   help="calibration set name or input path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", parents=[common],
                       help="full estimate report with checks and plots")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--set", action="append", default=None)
    p.add_argument("--prenormalize", action="store_true")
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--timing", action="store_true")
    p.add_argument("--no-plots", action="store_true")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
