"""Report documents: config echo, estimates, curves, checks, figures.

A report's JSON and CSV content is a pure function of the config echo,
so re-running the same invocation reproduces the files byte for byte.
Thread counts, output paths, and wall-clock timing are deliberately not
part of the echo; timing is attached only on request.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field

import numpy as np

from .pointset import PointSet
from .spectra import (DEFAULT_TOLERANCE, EstimateBundle, ScalePairQuery,
                      estimate_bundle)
from .verify import CheckReport, check_chain, check_zero_equivalences

# threshold handed to the zero-equivalence consistency check
DEFAULT_EPS = 0.1


@dataclass
class RunConfig:
    """Everything that determines a report's numeric content."""

    command: str
    source: dict
    parameters: dict = field(default_factory=dict)
    format: str = "json"
    seed: int | None = None

    def to_dict(self) -> dict:
        return {"command": self.command, "source": self.source,
                "parameters": self.parameters, "format": self.format,
                "seed": self.seed}


@dataclass
class ReportDocument:
    config: RunConfig
    label: str
    bundle: EstimateBundle | None
    checks: list
    timing: dict | None = None


def _estimate_dict(est) -> dict | None:
    if est is None:
        return None
    w = est.witness
    if isinstance(w, ScalePairQuery):
        w = {"x": list(w.x), "R": w.R, "r": w.r,
             "theta_effective": w.theta_effective}
    return {"value": est.value, "raw": est.raw, "method": est.method,
            "window": est.window, "witness": w,
            "diagnostics": _plain(est.diagnostics)}


def _plain(obj):
    """Recursively strip numpy scalar types for JSON serialization."""
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def document_dict(doc: ReportDocument) -> dict:
    b = doc.bundle
    out = {"config": doc.config.to_dict(), "label": doc.label,
           "timing": doc.timing}
    if b is not None:
        out["estimates"] = {
            "box": _estimate_dict(b.box),
            "quasi_assouad": _estimate_dict(b.quasi),
            "assouad": _estimate_dict(b.assouad)}
        out["bracket"] = b.bracket.to_json_dict() if b.bracket else None
        out["cover"] = [{"delta": float(d), "count": int(c)}
                        for d, c in zip(b.cover.deltas, b.cover.counts)]
        env = b.spectrum.envelope
        rows = []
        for th, est, e in zip(b.spectrum.thetas, b.spectrum.estimates,
                              env):
            rows.append({
                "theta": float(th),
                "raw": est.raw if est is not None else None,
                "value": est.value if est is not None else None,
                "envelope": None if np.isnan(e) else float(e)})
        out["spectrum"] = rows
    out["checks"] = [rep.to_json_dict() for rep in doc.checks]
    return _plain(out)


def build_report(ps: PointSet, config: RunConfig,
                 tolerance: float = DEFAULT_TOLERANCE,
                 eps: float = DEFAULT_EPS,
                 threads: int | None = None,
                 count_floor: int | None = None,
                 with_timing: bool = False) -> ReportDocument:
    """Full estimate bundle plus the chain and zero consistency checks."""
    from .spectra import COUNT_FLOOR
    cf = COUNT_FLOOR if count_floor is None else count_floor
    t0 = time.monotonic()
    bundle = estimate_bundle(ps, threads=threads, count_floor=cf)
    checks = [
        check_chain(ps, tau=tolerance, curve=bundle.spectrum,
                    box=bundle.box),
        check_zero_equivalences(ps, eps=eps, curve=bundle.spectrum),
    ]
    timing = None
    if with_timing:
        timing = {"seconds": time.monotonic() - t0}
    return ReportDocument(config=config, label=ps.label, bundle=bundle,
                          checks=checks, timing=timing)


def write_report(doc: ReportDocument, out_base: str,
                 with_plots: bool = True) -> list:
    """Write <base>.json, curve CSVs, checks JSONL, and PNG figures.

    Returns the list of paths written.  Figures are rendered last and
    never feed back into the delimited outputs.
    """
    parent = os.path.dirname(out_base)
    if parent:
        os.makedirs(parent, exist_ok=True)
    paths = []
    json_path = out_base + ".json"
    with open(json_path, "w") as fh:
        json.dump(document_dict(doc), fh, indent=2, sort_keys=True)
        fh.write("\n")
    paths.append(json_path)
    if doc.bundle is not None:
        cover_path = out_base + "_cover.csv"
        doc.bundle.cover.write_csv(cover_path)
        paths.append(cover_path)
        spec_path = out_base + "_spectrum.csv"
        doc.bundle.spectrum.write_csv(spec_path)
        paths.append(spec_path)
    if doc.checks:
        from .verify import write_check_reports
        checks_path = out_base + "_checks.jsonl"
        write_check_reports(doc.checks, checks_path)
        paths.append(checks_path)
    if with_plots and doc.bundle is not None:
        from .plots import plot_cover_curve, plot_spectrum_curve
        cover_png = out_base + "_cover.png"
        plot_cover_curve(doc.bundle.cover, cover_png)
        paths.append(cover_png)
        spec_png = out_base + "_spectrum.png"
        plot_spectrum_curve(doc.bundle.spectrum, spec_png)
        paths.append(spec_png)
    return paths
