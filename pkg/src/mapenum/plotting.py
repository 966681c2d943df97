"""Bar charts of run histograms, written straight to image files."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from mapenum.report import RunReport  # noqa: E402

_XLABEL = {"g": "genus g", "chi": "Euler characteristic $\\chi$", "F": "faces F"}


def plot_report(report: RunReport, path) -> Path:
    """Draw the histogram of ``report`` and save it; the format follows the suffix."""
    path = Path(path)
    keys = sorted(report.bins)
    counts = [report.bins[k] for k in keys]
    fig, ax = plt.subplots(figsize=(6, 4))
    try:
        bars = ax.bar([str(k) for k in keys], counts, color="0.35", edgecolor="black", linewidth=0.6)
        ax.bar_label(bars, labels=[f"{c:,}" for c in counts], fontsize=8, padding=2)
        ax.set_xlabel(_XLABEL[report.bin_label])
        ax.set_ylabel("labeled maps" if report.mode != "moments" else "matchings")
        profile = ",".join(f"{d}:{j}" for d, j in sorted(report.profile.items()))
        mode = report.mode if report.mode == report.orientation else f"{report.orientation} {report.mode}"
        ax.set_title(f"{mode} maps, profile {profile}", fontsize=10)
        ax.spines[["top", "right"]].set_visible(False)
        if counts and max(counts) / max(1, min(counts)) > 1e3:
            ax.set_yscale("log")
        fig.tight_layout()
        path.parent.mkdir(parents=True, exist_ok=True)
        fig.savefig(path, dpi=120)
    finally:
        plt.close(fig)
    return path
