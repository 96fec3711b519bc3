"""Matplotlib figures written next to the CSV output.

matplotlib is imported lazily so the library and the CSV paths work without it.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence


def _pyplot():
    try:
        import matplotlib
    except ImportError as exc:  # pragma: no cover - depends on the environment
        raise RuntimeError("figures need matplotlib: pip install 'mincycles[plot]'") from exc
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    plt.rcParams.update({
        "font.size": 11,
        "axes.linewidth": 0.8,
        "legend.frameon": False,
        "savefig.bbox": "tight",
    })
    return plt


def plot_rate_curves(rows: Sequence, path) -> Path:
    """The four rate exponents against R."""
    plt = _pyplot()
    R = [r.R for r in rows]
    fig, ax = plt.subplots(figsize=(6, 4.2))
    ax.plot(R, [r.trivial_upper for r in rows], "k--", lw=1, label="trivial upper  R")
    ax.plot(R, [r.matroid_upper for r in rows], "C0-", lw=1.2, label="matroid upper  H(R)")
    ax.plot(R, [r.random_lower for r in rows], "C2:", lw=1.5, label="random lower")
    ax.plot(R, [r.mu_g for r in rows], "C3-", lw=2, label=r"graphic  $\mu_g(R)$")
    ax.set_xlabel("rate R")
    ax.set_ylabel("exponent")
    ax.set_xlim(0, 1)
    ax.set_ylim(0, 1.05)
    ax.legend(loc="upper left")
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_census(records: Sequence, path) -> Path:
    """Histogram of sampled cycle counts with the 2^p + p reference marked."""
    plt = _pyplot()
    counts = [r.cycle_count for r in records]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(counts, bins=min(40, max(5, len(set(counts)))), color="0.6", edgecolor="0.3")
    ref = records[0].reference_value
    ax.axvline(ref, color="C3", lw=1.5, label=f"$2^p + p$ = {ref}")
    ax.set_xlabel("cycles")
    ax.set_ylabel("samples")
    ax.set_title(f"simple 4-regular graphs, p = {records[0].p}")
    ax.legend()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
