"""Standalone SVG figures for the degradation sweeps.

Rendering goes through matplotlib's Agg/SVG backend with a pinned hash salt
and no date metadata, so a fixed sweep produces byte-identical files on every
run. Labels stay as plain text elements; no external resources are referenced.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .fock import ValidationError
from .protocol import DegradationSeries

METRIC_LABELS = {
    "normalized_asymmetry": "normalized asymmetry",
    "fidelity": "fidelity",
}


def render_svg(series_list: list[DegradationSeries], metric: str, path: str) -> None:
    """One curve per reference size N, metric vs use count mu, legend, fixed axes.

    ``metric`` is "normalized_asymmetry" or "fidelity". Fidelity curves start
    at mu = 1 because no fidelity exists before the first use.
    """
    if metric not in METRIC_LABELS:
        raise ValidationError(f"unknown metric {metric!r}; choose from {sorted(METRIC_LABELS)}")
    if not series_list:
        raise ValidationError("no series to plot")

    # fonttype "none" keeps axis and legend labels as literal text elements;
    # the pinned hashsalt plus stripped date metadata make reruns byte-identical.
    with plt.rc_context({"svg.hashsalt": "phaseref", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(6.4, 4.0))
        for series in series_list:
            xs, ys = [], []
            for rec in series.records:
                value = getattr(rec, metric)
                if value is None:
                    continue
                xs.append(rec.mu)
                ys.append(value)
            ax.plot(xs, ys, marker=".", markersize=3, linewidth=1.2,
                    label=f"N={series.config.cutoff_n}")
        ax.set_xlabel(r"uses $\mu$")
        ax.set_ylabel(METRIC_LABELS[metric])
        ax.set_ylim(0.0, 1.0)
        ax.grid(True, alpha=0.3)
        ax.legend(loc="best")
        fig.tight_layout()
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
