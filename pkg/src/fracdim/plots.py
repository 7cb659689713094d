"""Static renderings of cover and spectrum curves.

Figures are side artifacts of the report path; all numeric output lives
in the JSON/CSV files, so plots carry no data a report does not.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


def plot_cover_curve(curve, path: str) -> None:
    """Log-log covering counts with the mesh decreasing left to right."""
    lx, ly = curve.log_pairs()
    ok = np.isfinite(ly)
    fig, ax = plt.subplots(figsize=(5.0, 3.8))
    ax.plot(lx[ok], ly[ok], "o-", color="tab:blue", ms=4)
    ax.set_xlabel("log 1/delta")
    ax.set_ylabel("log count")
    ax.set_title(curve.label or "cover curve")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def plot_spectrum_curve(curve, path: str) -> None:
    """Per-theta values and their running-max envelope."""
    th = curve.thetas
    vals = curve.values
    env = curve.envelope
    fig, ax = plt.subplots(figsize=(5.0, 3.8))
    ok = ~np.isnan(vals)
    ax.plot(th[ok], vals[ok], "o", color="tab:blue", ms=3,
            label="value")
    ok_e = ~np.isnan(env)
    ax.plot(th[ok_e], env[ok_e], "-", color="tab:orange",
            label="envelope")
    ax.set_xlabel("theta")
    ax.set_ylabel("dimension estimate")
    ax.set_xlim(0.0, 1.0)
    ax.set_title(curve.label or "spectrum")
    ax.legend(loc="lower right", fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
