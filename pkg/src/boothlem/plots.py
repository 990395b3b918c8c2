"""Matplotlib figure emission for the report paths.

All figures are rendered headless; SVG output is made diff-stable by fixing
the hash salt and dropping the date metadata.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

import numpy as np

from .domain import boundary_curve

__all__ = ["save_figure", "plot_domain_figure", "plot_radius_sweep", "plot_cho_comparison"]

plt.rcParams["svg.hashsalt"] = "boothlem"


def save_figure(fig, path: str):
    if str(path).endswith(".svg"):
        fig.savefig(path, metadata={"Date": None})
    else:
        fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_domain_figure(alphas, n: int = 720):
    """Boundary curves of the lemniscate domain for each alpha."""
    fig, ax = plt.subplots(figsize=(5, 5))
    for a in alphas:
        w = boundary_curve(a, n)
        ax.plot(w.real, w.imag, label=f"alpha = {a:g}")
    ax.set_aspect("equal")
    ax.axhline(0, color="0.8", lw=0.5)
    ax.axvline(0, color="0.8", lw=0.5)
    ax.set_xlabel("Re w")
    ax.set_ylabel("Im w")
    ax.legend(loc="upper right", fontsize=8)
    ax.set_title("Image of the unit disk under z/(1 - a z^2)")
    return fig


def plot_radius_sweep(rows, class_tag: str):
    """Radius-vs-alpha line chart from sweep rows (dicts with alpha/radius)."""
    fig, ax = plt.subplots(figsize=(6, 4))
    a = [r["alpha"] for r in rows]
    ax.plot(a, [r["radius"] for r in rows], marker="o", ms=3, label="radius")
    if class_tag == "bs":
        ax.plot(a, [r["r_prime"] for r in rows], ls="--", lw=1, label="root of l")
        ax.plot(a, [r["r_doubleprime"] for r in rows], ls=":", lw=1, label="root of m")
    ax.set_xlabel("alpha")
    ax.set_ylabel("radius of convexity")
    ax.set_title(f"{class_tag.upper()} radius of convexity")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    return fig


def plot_cho_comparison(rows):
    fig, ax = plt.subplots(figsize=(6, 4))
    a = [r["alpha"] for r in rows]
    ax.plot(a, [r["radius"] for r in rows], marker="o", ms=3, label="proven radius")
    ax.plot(a, [r["conjectured_radius"] for r in rows], marker="s", ms=3,
            label="conjectured radius")
    ax.set_xlabel("alpha")
    ax.set_ylabel("radius")
    ax.set_title("Radius of convexity vs. the conjectured quartic root")
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    return fig
