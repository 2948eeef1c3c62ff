"""Matplotlib renderings of the report artifacts, written next to the data files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from ..regress.cv import RegressionReport
from ..select.wavelengths import WavelengthHistogram
from ..stats.cluster import Dendrogram
from ..stats.correlation import CorrelationMatrix

# identical bytes for identical inputs: fixed sizes, no timestamps
SAVE_KWARGS = {"dpi": 130, "metadata": {"Software": "featurelab"}}


def correlation_heatmap(matrix: CorrelationMatrix, dendrogram: Dendrogram, path: str) -> None:
    order = dendrogram.leaf_order
    values = matrix.values[np.ix_(order, order)]
    labels = [matrix.labels[i] for i in order]
    size = max(4.0, 0.22 * len(labels) + 2.0)
    fig, ax = plt.subplots(figsize=(size, size))
    image = ax.imshow(values, cmap="RdBu_r", vmin=-1.0, vmax=1.0)
    ax.set_xticks(range(len(labels)), labels, rotation=90, fontsize=7)
    ax.set_yticks(range(len(labels)), labels, fontsize=7)
    fig.colorbar(image, ax=ax, shrink=0.8, label="Pearson r")
    ax.set_title("Feature correlation (cluster order)")
    fig.tight_layout()
    fig.savefig(path, **SAVE_KWARGS)
    plt.close(fig)


def pred_vs_truth(report: RegressionReport, path: str) -> None:
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.scatter(report.truth, report.predictions, s=18, alpha=0.7, edgecolor="none")
    lo = min(report.truth.min(), report.predictions.min())
    hi = max(report.truth.max(), report.predictions.max())
    ax.plot([lo, hi], [lo, hi], color="gray", linewidth=1, linestyle="--")
    ax.set_xlabel("ground truth")
    ax.set_ylabel("predicted")
    ax.set_title(
        f"Held-out predictions ({report.model_kind}), "
        f"$R^2$={report.aggregate.r2:.4f}, RMSE={report.aggregate.rmse:.4f}"
    )
    fig.tight_layout()
    fig.savefig(path, **SAVE_KWARGS)
    plt.close(fig)


def importance_bars(
    names: list[str], scores: np.ndarray, selected: set[str], path: str
) -> None:
    order = sorted(range(len(names)), key=lambda j: (-scores[j], j))
    height = max(2.5, 0.28 * len(names) + 1.2)
    fig, ax = plt.subplots(figsize=(6, height))
    ys = np.arange(len(order))
    colors = ["#7fb8da" if names[j] in selected else "#c9c9c9" for j in order]
    ax.barh(ys, [scores[j] for j in order], color=colors)
    ax.set_yticks(ys, [names[j] for j in order], fontsize=7)
    ax.invert_yaxis()
    ax.set_xlim(0, 1)
    ax.set_xlabel("ranking score")
    ax.set_title("Feature importance (selected highlighted)")
    fig.tight_layout()
    fig.savefig(path, **SAVE_KWARGS)
    plt.close(fig)


def wavelength_bars(hist: WavelengthHistogram, path: str) -> None:
    centers = (hist.bin_edges[:-1] + hist.bin_edges[1:]) / 2.0
    width = hist.bin_edges[1] - hist.bin_edges[0]
    fig, ax = plt.subplots(figsize=(7, 3))
    ax.bar(centers, hist.counts, width=width * 0.95, color="#5e9c76")
    ax.set_xlabel("wavelength (nm)")
    ax.set_ylabel("uses in selected indices")
    title = "Wavelengths behind the selected indices"
    if hist.overflow:
        title += f" (+{hist.overflow} above 900 nm)"
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, **SAVE_KWARGS)
    plt.close(fig)


def bench_bars(mean_r2: dict[str, float], path: str) -> None:
    models = list(mean_r2)
    fig, ax = plt.subplots(figsize=(4, 3.2))
    ax.bar(models, [mean_r2[m] for m in models], color=["#4878a8", "#c78653"])
    ax.set_ylabel("mean held-out $R^2$")
    ax.set_title("Model comparison across seeds")
    for i, m in enumerate(models):
        ax.text(i, mean_r2[m], f"{mean_r2[m]:.3f}", ha="center", va="bottom", fontsize=9)
    fig.tight_layout()
    fig.savefig(path, **SAVE_KWARGS)
    plt.close(fig)
